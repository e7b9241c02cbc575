#pragma once

#include "gfa/embedding.hpp"
#include "gfa/parser.hpp"

namespace gfa::test {

inline ShrinkingFamily at_inf() {
    return make_family(FamilyKind::at_infinity, Ambient::full_space(1));
}

inline ShrinkingFamily at_inf_right() {
    return make_family(FamilyKind::at_infinity, Ambient::full_space(1), std::nullopt,
                       InfinitySide::right);
}

inline Representative expr_rep(const std::string& src, int n,
                               const ShrinkingFamily& fam) {
    return Representative::from_expression(
        parse_expression(src, fam.dimension()), fam.dimension(),
        space_index(n, WeightFunction::constant(1.0), fam), src);
}

inline Representative expr_rep(const std::string& src) {
    return Representative::from_expression(parse_expression(src, 1), 1, std::nullopt,
                                           src);
}

} // namespace gfa::test
