#pragma once

// Reference values produced by tests/oracles/derive.py (mpmath, 30 digits)
// and by hand derivations noted next to each constant. The library never
// computes these; tests compare against them.

namespace oracle {

// Area of the unit Lp ball, 4 Gamma(1 + 1/p)^2 / Gamma(1 + 2/p).
inline constexpr double kLpArea_0_05 = 2.9017778207699376147e-11;
inline constexpr double kLpArea_third = 0.2;
inline constexpr double kLpArea_half = 2.0 / 3.0;
inline constexpr double kLpArea_one = 2.0;
inline constexpr double kLpArea_three_halves = 2.737853623918902908;
inline constexpr double kLpArea_two = 3.1415926535897932385;

// N/2 sin(2 pi / N), the area of the regular 4096-gon inscribed in the unit circle.
inline constexpr double kRegularPolygonArea4096 = 3.141591421511199974;

// sup over the tip diamond of the distance to L_{1/2}; attained at (1/2, 1/2)
// against (1/4, 1/4), i.e. sqrt(2)/4.
inline constexpr double kHalfBallSupDistance = 0.3535533905932737622;
inline constexpr double kHalfBallMaxdist = 0.73879612503625855749;

// Hausdorff distance between the unit disc and the square [-1, 1]^2.
inline constexpr double kSqrt2Minus1 = 0.4142135623730950488;

// Each of the four pockets of L_{1/2} is a quadrant triangle (area 1/2) minus
// a quarter of the ball (area 1/6); over the hull area 2 that is 1/6.
inline constexpr double kHalfBallPocketRatio = 1.0 / 6.0;

// Two unit squares with gap g: hull area 2 + g, pocket area g, the gap
// midpoint is g/2 from the shape, and a random segment stays inside iff both
// ends fall in the same square.
inline double two_squares_env(double g) { return 2.0 / (2.0 + g); }
inline double two_squares_maxdist(double g) { return 1.0 / (1.0 + 0.5 * g); }
inline double two_squares_pocket_ratio(double g) { return g / (2.0 + g); }
inline constexpr double kTwoSquaresCi = 0.5;
inline constexpr double kTwoSquaresProb = 0.5;

// Closed forms as printed, evaluated at high precision.
struct ClosedFormValue {
  const char* measure;
  double p;
  double value;
};
inline constexpr ClosedFormValue kClosedFormValues[] = {
    {"cihi", 0.3, 0.85762440768848984449},    {"cihi", 0.7, 0.94946290550980223247},
    {"env", 0.3, 0.11013981986815616002},     {"env", 0.7, 0.5910862822291722153},
    {"maxdist", 0.3, 0.039372532809214786399}, {"maxdist", 0.7, 0.55204475683690616882},
    {"ce", 0.3, 0.019839258693045159948},     {"ce", 0.7, 0.44604658261818118566},
    {"ci", 0.3, 0.59537304420074728967},      {"ci", 0.7, 0.86634747321138447822},
};

}  // namespace oracle
