#pragma once

// Reference values evaluated once at 40 significant digits with mpmath and
// frozen here. Each entry names the inputs it was computed from.

namespace hypoly::oracle {

// Triangle (0,0), (0.5,0), (0,0.5) in the Klein disk.
inline constexpr double kKleinTriangleArea = 0.1433475689053654;
inline constexpr double kKleinTriangleDet = 1.0 / 3.0;
// d((0,0), (0.5,0)) and its half-sinh chord quantity.
inline constexpr double kDistanceHalf = 0.5493061443340548;
inline constexpr double kChordHalf = 0.2781191636504500;

// Equilateral triangle with unit sides.
inline constexpr double kUnitEquilateralArea = 0.3851990370557111;
// Maximal-area hinge with unit arms: enclosed angle and opposite side.
inline constexpr double kUnitHingeAngle = 1.3555866559926345;
inline constexpr double kUnitHingeSide = 1.3653329142432114;
inline constexpr double kUnitHingeArea = 0.4304193416;
// Maximal area with four unit sides.
inline constexpr double kUnitRhombusArea = 0.8608386832090484;

// Circumscribed distance circles.
inline constexpr double kEquilateralRho = 0.6017090298005306;
inline constexpr double kEquilateralRadius = 0.5702898271141294;
inline constexpr double kUnitSquareRho = 0.7369400483182087;

// Sides (2, 2, 2 asinh(2 sinh 1)) lie on a horocycle.
inline constexpr double kHoroThirdSide = 3.1803842732024564;
inline constexpr double kHoroTriangleArea = 1.1260041086017831;

// Sides (3, 3, 5.9) lie on a distance line: cosh of its offset, offset, area.
inline constexpr double kLineCoshOffset = 1.0640280184843581;
inline constexpr double kLineOffset = 0.3559668112457818;
inline constexpr double kLineTriangleArea = 0.5642296751863894;

// Third vertex of triangle_from_sides(1, 1, 1): (x0, x1, |x2|).
inline constexpr double kUnitTriangleThird[3] = {1.5430806348, 0.7130840364, 0.9341354305};

// Fan-term denominator <z,a>+<z,b>+<a,b>+1 for z = centre and the vertices
// (0.5,0), (0,0.5).
inline constexpr double kFanDenominator = 4.6427344101;

}  // namespace hypoly::oracle
