// Generated by scripts/make_refvalues.py (mpmath, 40 digit working precision).
// Do not edit by hand; rerun the script instead.
#pragma once
#include <complex>

namespace refval {

struct RealSample { double x; double value; };
struct ComplexSample { double re, im; double vre, vim; };
struct OrderSample { double sre, sim; double x; double vre, vim; };

inline constexpr RealSample kJ0[] = {
    {0.0010000000000000000, 0.99999975000001562},
    {0.010000000000000000, 0.99997500015624957},
    {0.10000000000000001, 0.99750156206604003},
    {0.25000000000000000, 0.98443592929585270},
    {0.50000000000000000, 0.93846980724081290},
    {1.0000000000000000, 0.76519768655796655},
    {2.0000000000000000, 0.22389077914123567},
    {3.0000000000000000, -0.26005195490193344},
    {4.0000000000000000, -0.39714980986384737},
    {5.0000000000000000, -0.17759677131433830},
    {6.0000000000000000, 0.15064525725099693},
    {7.0000000000000000, 0.30007927051955560},
    {8.0000000000000000, 0.17165080713755391},
    {9.0000000000000000, -0.090333611182876134},
    {10.000000000000000, -0.24593576445134834},
    {11.000000000000000, -0.17119030040719609},
    {11.900000000000000, 0.025049441699589645},
    {12.000000000000000, 0.047689310796833537},
    {12.100000000000000, 0.069666773606807312},
    {13.000000000000000, 0.20692610237706781},
    {14.000000000000000, 0.17107347611045866},
    {15.000000000000000, -0.014224472826780773},
    {15.900000000000000, -0.16497049948567061},
    {16.000000000000000, -0.17489907398362918},
    {16.100000000000001, -0.18302369246531049},
    {17.000000000000000, -0.16985425215118355},
    {20.000000000000000, 0.16702466434058315},
    {30.000000000000000, -0.086367983581040211},
    {50.000000000000000, 0.055812327669251815},
    {100.00000000000000, 0.019985850304223122},
    {316.00000000000000, 0.022140579882089442},
    {500.00000000000000, -0.034100556880731998},
    {1000.0000000000000, 0.024786686152420175},
};

inline constexpr RealSample kJ1[] = {
    {0.0010000000000000000, 0.00049999993750000261},
    {0.010000000000000000, 0.0049999375002604162},
    {0.10000000000000001, 0.049937526036242000},
    {0.25000000000000000, 0.12402597732272692},
    {0.50000000000000000, 0.24226845767487389},
    {1.0000000000000000, 0.44005058574493352},
    {2.0000000000000000, 0.57672480775687339},
    {3.0000000000000000, 0.33905895852593646},
    {4.0000000000000000, -0.066043328023549136},
    {5.0000000000000000, -0.32757913759146522},
    {6.0000000000000000, -0.27668385812756561},
    {7.0000000000000000, -0.0046828234823458327},
    {8.0000000000000000, 0.23463634685391462},
    {9.0000000000000000, 0.24531178657332527},
    {10.000000000000000, 0.043472746168861437},
    {11.000000000000000, -0.17678529895672150},
    {11.900000000000000, -0.22898324966192406},
    {12.000000000000000, -0.22344710449062761},
    {12.100000000000000, -0.21574897337692481},
    {13.000000000000000, -0.070318052121778371},
    {14.000000000000000, 0.13337515469879325},
    {15.000000000000000, 0.20510403861352276},
    {15.900000000000000, 0.10802789006306503},
    {16.000000000000000, 0.090397175661304186},
    {16.100000000000001, 0.071979418622449991},
    {17.000000000000000, -0.097668492757780650},
    {20.000000000000000, 0.066833124175850046},
    {30.000000000000000, -0.11875106261662294},
    {50.000000000000000, -0.097511828125175138},
    {100.00000000000000, -0.077145352014112158},
    {316.00000000000000, 0.039078797021074310},
    {500.00000000000000, 0.010472613470372293},
    {1000.0000000000000, 0.0047283119070895239},
};

inline constexpr RealSample kY0[] = {
    {0.0010000000000000000, -4.4714166113759233},
    {0.010000000000000000, -3.0054556370836459},
    {0.10000000000000001, -1.5342386513503668},
    {0.25000000000000000, -0.93157302493005869},
    {0.50000000000000000, -0.44451873350670656},
    {1.0000000000000000, 0.088256964215676958},
    {2.0000000000000000, 0.51037567264974512},
    {3.0000000000000000, 0.37685001001279038},
    {4.0000000000000000, -0.016940739325064992},
    {5.0000000000000000, -0.30851762524903378},
    {6.0000000000000000, -0.28819468398157915},
    {7.0000000000000000, -0.025949743967209265},
    {8.0000000000000000, 0.22352148938756622},
    {9.0000000000000000, 0.24993669828502468},
    {10.000000000000000, 0.055671167283599391},
    {11.000000000000000, -0.16884732389207954},
    {11.900000000000000, -0.22983321394337506},
    {12.000000000000000, -0.22523731263436143},
    {12.100000000000000, -0.21843838055092549},
    {13.000000000000000, -0.078207864527875911},
    {14.000000000000000, 0.12719256858218369},
    {15.000000000000000, 0.20546429603891826},
    {15.900000000000000, 0.11315496565176706},
    {16.000000000000000, 0.095810997080712403},
    {16.100000000000001, 0.077620758701382402},
    {17.000000000000000, -0.092637198442323693},
    {20.000000000000000, 0.062640596809383831},
    {30.000000000000000, -0.11729573168666403},
    {50.000000000000000, -0.098064995470077079},
    {100.00000000000000, -0.077244313365083152},
    {316.00000000000000, 0.039043715671414698},
    {500.00000000000000, 0.010506708739831374},
    {1000.0000000000000, 0.0047159179776228134},
};

inline constexpr RealSample kK0[] = {
    {0.0010000000000000000, 7.0236888005623813},
    {0.010000000000000000, 4.7212447301610949},
    {0.10000000000000001, 2.4270690247020166},
    {0.25000000000000000, 1.5415067512483028},
    {0.50000000000000000, 0.92441907122766586},
    {1.0000000000000000, 0.42102443824070833},
    {2.0000000000000000, 0.11389387274953344},
    {3.0000000000000000, 0.034739504386279248},
    {4.0000000000000000, 0.011159676085853024},
    {5.0000000000000000, 0.0036910983340425943},
    {6.0000000000000000, 0.0012439943280131231},
    {7.0000000000000000, 0.00042479574186923181},
    {8.0000000000000000, 0.00014647070522281539},
    {9.0000000000000000, 5.0881312956459248e-5},
    {10.000000000000000, 1.7780062316167652e-5},
    {11.000000000000000, 6.2430205476536771e-6},
    {11.900000000000000, 2.4422886371722710e-6},
    {12.000000000000000, 2.2008253973114914e-6},
    {12.100000000000000, 1.9833013543985361e-6},
    {13.000000000000000, 7.7845438614204963e-7},
    {14.000000000000000, 2.7613708239816199e-7},
    {15.000000000000000, 9.8195364823964345e-8},
    {15.900000000000000, 3.8794110173203380e-8},
    {16.000000000000000, 3.4994116639364989e-8},
    {16.100000000000001, 3.1566942174159580e-8},
    {17.000000000000000, 1.2494664026317732e-8},
    {20.000000000000000, 5.7412378153365243e-10},
    {30.000000000000000, 2.1324774964630564e-14},
    {50.000000000000000, 3.4101677497894955e-23},
    {100.00000000000000, 4.6566282291759020e-45},
    {316.00000000000000, 4.0830866173300850e-139},
    {500.00000000000000, 3.9923216091177929e-219},
};

inline constexpr OrderSample kKnu[] = {
    {0.0, 0.0, 2.0000000000000000, 0.11389387274953344, 0.0},
    {0.50000000000000000, 0.0, 2.0000000000000000, 0.11993777196806145, 0.0},
    {0.50000000000000000, 3.0000000000000000, 2.0000000000000000, 0.011328996956835236, 0.011165946689945285},
    {0.0, 10.000000000000000, 1.0000000000000000, 1.1294550821681802e-7, 0.0},
    {2.0000000000000000, 25.000000000000000, 3.0000000000000000, -5.0025598872782749e-16, -3.5282496663683591e-16},
    {-1.5000000000000000, 60.000000000000000, 2.5000000000000000, -3.0053827493790053e-40, 5.5391240674163348e-40},
    {0.25000000000000000, 120.00000000000000, 2.0000000000000000, -5.1954414257832543e-84, 4.7519684642498815e-83},
    {0.0, 200.00000000000000, 2.0000000000000000, -2.1757694421969185e-138, 0.0},
    {3.0000000000000000, 0.0, 0.50000000000000000, 62.057909529930256, 0.0},
    {1.0000000000000000, 40.000000000000000, 6.0000000000000000, -2.9193428134910890e-28, 1.3385023016697806e-27},
};

inline constexpr ComplexSample kLogGamma[] = {
    {0.50000000000000000, 0.0, 0.57236494292470009, 0.0},
    {4.0000000000000000, 0.0, 1.7917594692280550, 0.0},
    {1.0000000000000000, 0.0, 0.0, 0.0},
    {0.50000000000000000, 14.134725000000000, -21.283835577051322, 23.305944472665730},
    {-2.5000000000000000, 1.0000000000000000, -2.3441906524655926, -8.3041279866579259},
    {-4.2999999999999998, -2.2000000000000002, -8.2269026865956229, 11.552814001279741},
    {10.000000000000000, 50.000000000000000, -40.400262350482971, 159.62737280472833},
    {0.10000000000000001, 0.10000000000000001, 1.8989912736759002, -0.82746470777307575},
    {-0.50000000000000000, 30.000000000000000, -49.606287521906718, 70.449848978296956},
    {3.0000000000000000, -99.000000000000000, -143.10184316237283, -359.81271428744061},
    {60.000000000000000, 80.000000000000000, 140.74344716196712, 343.58701368445443},
    {-20.500000000000000, 0.50000000000000000, -43.621200679631747, -64.451090077772974},
};

inline constexpr ComplexSample kZeta[] = {
    {2.0000000000000000, 0.0, 1.6449340668482264, 0.0},
    {0.0, 0.0, -0.50000000000000000, 0.0},
    {-1.0000000000000000, 0.0, -0.083333333333333333, 0.0},
    {0.50000000000000000, 14.000000000000000, 0.022241142609993589, -0.10325812326645006},
    {0.50000000000000000, 100.00000000000000, 2.6926198856813241, -0.020386029602598162},
    {-1.0000000000000000, 37.000000000000000, -12.011394297570297, -9.7450606747403962},
    {3.0000000000000000, -20.000000000000000, 0.98826148470410569, 0.13204479027108086},
    {-5.0000000000000000, 100.00000000000000, 4102695.5995188212, 575090.42866189552},
    {5.0000000000000000, 5.0000000000000000, 0.97381924255457401, 0.011982517435742525},
    {-4.5000000000000000, 0.29999999999999999, -0.0035089933494899250, 0.0012430960565109270},
    {1.5000000000000000, 0.0, 2.6123753486854883, 0.0},
    {0.29999999999999999, 4.0000000000000000, 0.57575637861406808, 0.10773024520055681},
};

inline constexpr ComplexSample kLChi4[] = {
    {1.0000000000000000, 0.0, 0.78539816339744831, 0.0},
    {2.0000000000000000, 0.0, 0.91596559417721902, 0.0},
    {0.69999999999999996, 0.0, 0.72016144368670443, 0.0},
    {0.0, 0.0, 0.50000000000000000, 0.0},
    {-2.5000000000000000, 0.0, -0.47477605327648973, 0.0},
    {0.50000000000000000, 20.000000000000000, 2.8510651544833458, -0.36483657908491392},
    {-3.0000000000000000, 5.0000000000000000, 66.443253228027613, -30.409793214841580},
    {4.0000000000000000, -8.0000000000000000, 1.0118571117270527, -0.0070457546664928137},
    {0.29999999999999999, 0.0, 0.60718361295478587, 0.0},
    {-1.0000000000000000, 25.000000000000000, 37.845203148130159, -55.456677195494337},
};

inline constexpr RealSample kTheta[] = {
    {0.10000000000000001, 3.1622776601685229},
    {0.50000000000000000, 1.4194954880837661},
    {1.0000000000000000, 1.0864348112133080},
    {2.0000000000000000, 1.0037348854877391},
    {3.7000000000000002, 1.0000178993593238},
    {10.000000000000000, 1.0000000000000454},
};

inline constexpr double kJ0_at_1 = 0.76519768655796655;
inline constexpr double kTheta_at_1 = 1.0864348112133080;
inline constexpr double kEulerGamma = 0.57721566490153286;

} // namespace refval
