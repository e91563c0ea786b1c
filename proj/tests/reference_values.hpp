#pragma once

// Frozen 40-digit values from tests/oracles/freeze.py (mpmath).

#include <complex>

namespace reference {

using C = std::complex<double>;

struct LogGammaCase {
  C z;
  C value;
};

inline const LogGammaCase kLogGamma[] = {
    {{3.50000000000000000, 2.00000000000000000}, {0.580733212081268169, 2.33531684191616277}},
    {{0.500000000000000000, 14.0000000000000000}, {-21.0722100419238799, 22.9497796922959853}},
    {{-2.29999999999999982, 0.699999999999999956}, {-1.26642948519308938, -8.07678236671205563}},
    {{-10.5000000000000000, 30.0000000000000000}, {-83.8548041195460472, 52.7846392703841094}},
    {{2.00000000000000000, 300.000000000000000}, {-461.764280237755320, 1413.48732578818427}},
    {{0.0100000000000000002, 0.0100000000000000002}, {4.25282522969008270, -0.791006627929438304}},
    {{25.0000000000000000, -40.0000000000000000}, {29.8490188149157470, -138.947572548000830}},
    {{-0.500000000000000000, -3.00000000000000000}, {-4.90576222619839009, 1.42612573312308429}},
};

struct Hyp2f1Case {
  C a;
  C b;
  C c;
  double w;
  C value;
};

inline const Hyp2f1Case kHyp2f1[] = {
    {{1.50000000000000000, -0.500000000000000000}, {-0.699999999999999956, 2.00000000000000000}, {1.00000000000000000, -3.00000000000000000}, 0.299999999999999989, {0.730673686179636751, 0.0397397436943049163}},
    {{1.50000000000000000, -0.500000000000000000}, {-0.699999999999999956, 2.00000000000000000}, {1.00000000000000000, -3.00000000000000000}, 0.800000000000000044, {0.468614691235238812, 0.00652853701638291882}},
    {{2.20000000000000018, 1.00000000000000000}, {0.299999999999999989, -0.400000000000000022}, {1.00000000000000000, -0.900000000000000022}, 0.949999999999999956, {-12.6503350466024501, -5.07836119166239605}},
    {{10.3000000000000007, -8.00000000000000000}, {-9.09999999999999964, -8.00000000000000000}, {1.00000000000000000, -16.0000000000000000}, 0.500000000000000000, {0.929031440158325379, 0.608320917569783551}},
    {{10.3000000000000007, -8.00000000000000000}, {-9.09999999999999964, -8.00000000000000000}, {1.00000000000000000, -16.0000000000000000}, 0.998999999999999999, {1.43601437447642402, -8.47638772094775219}},
};

struct MapCase {
  double lambda;
  double y;
  double x;
};

inline const MapCase kMap[] = {
    {7.00000000000000000, 0.900000000000000022, 0.229658901890038950},
    {0.500000000000000000, 0.699999999999999956, 1.03421670012636609},
    {3.39999999999999991, 0.989999999999999991, 0.585796048384654420},
    {1.19999999999999996, -0.400000000000000022, -0.413670093919669643},
};

struct ScatteringCase {
  C nu;
  double lambda;
  int sign;
  double energy;
  double R;
  double T;
};

inline const ScatteringCase kScattering[] = {
    {{4.66999999999999993, 7.83659999999999979}, 1.73999999999999999, 1, 100.000000000000000, 2272660.92548567135, 747.149783461812570},
    {{-0.599999999999999978, 0.500000000000000000}, 7.00000000000000000, -1, 100.000000000000000, 0.486355174817153693, 0.811961459118876210},
    {{0.0, -2.64999999999999991}, 3.39999999999999991, -1, 50.0000000000000000, 2.64612181859105836, 0.00120620904211033015},
    {{-0.599999999999999978, 2.00000000000000000}, 6.00000000000000000, -1, 300.000000000000000, 0.303632603066396430, 1.29549934080709806},
    {{-8.39000000000000057, 10.4000000000000004}, 1.35099999999999998, -1, 248.000000000000000, 5738113374656532.78, 5303541771297363.89},
    {{1.89999999999999991, -2.39999999999999991}, 2.12699999999999978, -1, 0.500000000000000000, 1.64187242227413411, 0.000000512441567491814667},
    {{-3.00000000000000000, -8.50000000000000000}, 0.959999999999999964, 1, 900.000000000000000, 3.38951064566341212e-73, 13.8027358502544072},
};

}  // namespace reference
