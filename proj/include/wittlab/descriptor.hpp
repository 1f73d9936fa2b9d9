#ifndef WITTLAB_DESCRIPTOR_HPP
#define WITTLAB_DESCRIPTOR_HPP

#include <string>
#include <vector>

#include "wittlab/asw.hpp"
#include "wittlab/perm.hpp"
#include "wittlab/ring.hpp"

namespace wittlab {

// ring descriptor text: "F(p,m)[x,1/h]" (also accepts the "Fq(...)" spelling);
// h is a polynomial expression in x, "1" for the affine line
RingPtr parse_ring_descriptor(const std::string& text, Mode mode = Mode::Geometric);

// expression over A: integers, x, w (the field generator), + - * / ^ and
// parentheses; division is restricted to units of A
RingElem parse_ring_elem(const std::string& text, const RingPtr& ring);

// "[a1,a2,...]" with component expressions
asw::WV parse_witt_vector(const std::string& text, const RingPtr& ring);

// "deg=5; gens=(0 1 2 3 4),(0 1)"
grp::PermGroup parse_group_descriptor(const std::string& text,
                                      size_t cap = grp::kDefaultOrderCap);

// cycle notation "(0 1 2)(3 4)"; "()" is the identity
grp::Perm parse_perm_cycles(const std::string& text, int degree);

// comma-separated permutations in cycle notation
std::vector<grp::Perm> parse_perm_list(const std::string& text, int degree);

} // namespace wittlab

#endif
