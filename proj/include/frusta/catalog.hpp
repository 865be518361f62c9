#pragma once

#include "frusta/certificate.hpp"
#include "frusta/formulas.hpp"

namespace frusta {

// Builders for the classical frustum and pyramid rearrangements. Every
// builder emits a self-contained certificate: sources in world poses, pieces
// with exact dual placements, and the claims stating what the arrangement
// proves. All placements use proper motions.

// Symmetric frustum cut into one central cuboid, four prisms and four corner
// pyramids. s = (a-b)/2 throughout.
RearrangementCertificate nine_part_frustum(const Rational& a, const Rational& b, const Rational& h);

// Three copies of the frustum rearranged into the three boxes a*a*h, a*b*h,
// b*b*h. The five central cells of the big box are filled exactly; the four
// corner cells are tiled exactly when h = s (each by three corner pyramids
// around the diagonal axis) and otherwise carry a volume-equality claim for
// the twelve corner pyramids, which presupposes the pyramid one-third rule.
RearrangementCertificate liu_hui_three_copies(const Rational& a, const Rational& b, const Rational& h);

// Four congruent corner pyramids assembled into the symmetric pyramid with
// doubled base side.
RearrangementCertificate four_yangma_pyramid(const Rational& s, const Rational& h);

// Right frustum cut into central cuboid, two prisms and one corner pyramid;
// the two prisms stack point-symmetrically into a box.
RearrangementCertificate right_frustum_parts(const Rational& a, const Rational& b, const Rational& h);

// Four right frusta, rotated around the vertical axis with their square
// corners meeting in the middle, tile the symmetric frustum with doubled
// base and top.
RearrangementCertificate four_right_frustums(const Rational& a, const Rational& b, const Rational& h);

enum class CubeDissection { ThreeYangma, SixJuel, TwoQiandu };

RearrangementCertificate cube_dissections(const Rational& a, CubeDissection kind);

// The three corner pyramids of a general box, each spanned from one corner
// to an opposite face. Tiles every box; the pieces are mutually congruent
// only when the box is a cube, so no congruence claims are attached here.
RearrangementCertificate box_corner_pyramids(const Rational& p, const Rational& q, const Rational& r);

// qiandu = yangma + complementary tetrahedron (volumes 1/3 and 1/6 of the box).
RearrangementCertificate qiandu_split(const Rational& p, const Rational& q, const Rational& r);

// The full bundle for the doubled-base frustum (a = 2b): nine-part cut, the
// four corner pyramids reassembled congruent to the removed top, the cuboid
// and prisms boxed into hab = 2hb^2, the 1:8 similarity of top and full
// pyramid, and the resulting identity 6 V_P = 2hb^2.
RearrangementCertificate shutler_certificate(const Rational& b, const Rational& h);

// volume(truncated_juel(a,b)) = (a^3 - b^3)/6 = classic frustum rule at
// height (a-b)/2, checked exactly.
CheckReport truncated_juel_check(const Rational& a, const Rational& b);

}  // namespace frusta
