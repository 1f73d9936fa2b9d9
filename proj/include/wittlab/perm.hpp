#ifndef WITTLAB_PERM_HPP
#define WITTLAB_PERM_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wittlab/error.hpp"

namespace wittlab {
namespace grp {

inline constexpr size_t kDefaultOrderCap = 10000;

class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<uint16_t> images); // validates bijectivity
    static Perm identity(int degree);

    int degree() const { return (int)img_.size(); }
    uint16_t apply(uint16_t x) const { return img_[x]; }
    const std::vector<uint16_t>& images() const { return img_; }

    // (a*b)(x) = a(b(x)): b acts first
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    Perm conjugated_by(const Perm& g) const; // g * this * g^{-1}

    bool is_identity() const;
    long order() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    std::string cycles() const; // "(0 1 2)(3 4)", "()" for the identity

  private:
    std::vector<uint16_t> img_;
};

struct PermHash {
    size_t operator()(const Perm& p) const {
        size_t h = 1469598103934665603ull;
        for (uint16_t v : p.images()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Finite permutation group given by generators, with a lazily materialized
// element set behind a shared, mutex-guarded cell. Copies share the cache;
// everything observable is immutable after materialization.
class PermGroup {
  public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Perm> gens, size_t order_cap = kDefaultOrderCap);
    static PermGroup trivial(int degree);

    int degree() const;
    const std::vector<Perm>& generators() const;
    size_t order_cap() const;

    // materialized queries (may raise OrderCapExceeded on first use)
    size_t order() const;
    const std::vector<Perm>& elements() const; // sorted
    bool contains(const Perm& g) const;
    int element_index(const Perm& g) const; // index into elements(), -1 if absent
    bool is_trivial() const { return order() == 1; }
    bool is_abelian() const;
    Perm identity() const { return Perm::identity(degree()); }

    // generator word for an element: e = gens[w0] * gens[w1] * ...
    std::vector<int> word_for(const Perm& g) const;

    bool same_set(const PermGroup& o) const;
    bool is_subgroup_of(const PermGroup& G) const;
    bool is_normal_in(const PermGroup& G) const;

    std::vector<std::vector<int>> conjugacy_classes() const; // indices into elements()
    std::vector<long> element_order_multiset() const;        // sorted

  private:
    struct Mat {
        std::vector<Perm> sorted;                          // canonical order
        std::unordered_map<Perm, int, PermHash> index;     // into sorted
        std::vector<Perm> discovered;                      // BFS order
        std::vector<std::pair<int, int>> parent;           // (discovery parent, gen), identity = (-1,-1)
        std::unordered_map<Perm, int, PermHash> disc_index;
    };
    struct Impl {
        int degree = 1;
        std::vector<Perm> gens;
        size_t cap = kDefaultOrderCap;
        mutable std::mutex mu;
        mutable std::shared_ptr<const Mat> mat;
    };

    const Mat& materialized() const;

    std::shared_ptr<Impl> impl_;
};

// greedy small generating sequence for a set of permutations; cap bounds the
// order of the group they generate (defaults to the set size, which is right
// when the set is already closed)
std::vector<Perm> small_generating_set(int degree, const std::vector<Perm>& elements,
                                       size_t cap = 0);

// subgroup of the symmetric group generated by the given elements
PermGroup subgroup_generated(int degree, const std::vector<Perm>& gens,
                             size_t cap = kDefaultOrderCap);

// Group homomorphism with a dense element map, built from generator images and
// verified by telescoping: f(x*g) = f(x)*f(g) for every element x and
// generator g.
class GroupHom {
  public:
    static GroupHom from_generator_images(const PermGroup& dom, const PermGroup& cod,
                                          const std::vector<Perm>& gen_images);
    static std::optional<GroupHom> try_from_generator_images(const PermGroup& dom,
                                                             const PermGroup& cod,
                                                             const std::vector<Perm>& gen_images);
    static GroupHom from_function(const PermGroup& dom, const PermGroup& cod,
                                  const std::function<Perm(const Perm&)>& f);

    const PermGroup& domain() const { return dom_; }
    const PermGroup& codomain() const { return cod_; }
    Perm operator()(const Perm& x) const;

    PermGroup image() const;
    PermGroup kernel() const;
    bool is_surjective() const;
    bool is_injective() const;

    static GroupHom compose(const GroupHom& outer, const GroupHom& inner); // outer(inner(x))

  private:
    GroupHom(PermGroup dom, PermGroup cod,
             std::unordered_map<Perm, Perm, PermHash> table);

    PermGroup dom_, cod_;
    std::unordered_map<Perm, Perm, PermHash> table_;
};

} // namespace grp
} // namespace wittlab

#endif
