#include "wittlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wittlab {
namespace grp {

Perm::Perm(std::vector<uint16_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (uint16_t v : img_) {
        require(v < img_.size() && !seen[v], ErrorKind::InvalidArgument,
                "permutation images are not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<uint16_t> img((size_t)degree);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
    require(degree() == o.degree(), ErrorKind::GroupMismatch, "permutation degree mismatch");
    std::vector<uint16_t> img((size_t)degree());
    for (int i = 0; i < degree(); ++i) img[(size_t)i] = img_[o.img_[(size_t)i]];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<uint16_t> img((size_t)degree());
    for (int i = 0; i < degree(); ++i) img[img_[(size_t)i]] = (uint16_t)i;
    return Perm(std::move(img));
}

Perm Perm::conjugated_by(const Perm& g) const { return g * (*this * g.inverse()); }

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[(size_t)i] != i) return false;
    return true;
}

long Perm::order() const {
    // lcm of cycle lengths
    std::vector<bool> seen(img_.size(), false);
    long ord = 1;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string Perm::cycles() const {
    std::vector<bool> seen(img_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = true;
            continue;
        }
        any = true;
        os << "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << " ";
            first = false;
            os << j;
            j = img_[j];
        }
        os << ")";
    }
    if (!any) return "()";
    return os.str();
}

PermGroup::PermGroup(int degree, std::vector<Perm> gens, size_t order_cap) {
    require(degree >= 1, ErrorKind::InvalidArgument, "degree must be >= 1");
    for (const auto& g : gens)
        require(g.degree() == degree, ErrorKind::GroupMismatch,
                "generator degree mismatch");
    impl_ = std::make_shared<Impl>();
    impl_->degree = degree;
    impl_->gens = std::move(gens);
    impl_->cap = order_cap;
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

int PermGroup::degree() const { return impl_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return impl_->gens; }
size_t PermGroup::order_cap() const { return impl_->cap; }

const PermGroup::Mat& PermGroup::materialized() const {
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (impl_->mat) return *impl_->mat;
    }
    auto mat = std::make_shared<Mat>();
    Perm id = Perm::identity(impl_->degree);
    mat->discovered.push_back(id);
    mat->parent.emplace_back(-1, -1);
    mat->disc_index.emplace(id, 0);
    for (size_t head = 0; head < mat->discovered.size(); ++head) {
        Perm cur = mat->discovered[head];
        for (size_t gi = 0; gi < impl_->gens.size(); ++gi) {
            Perm nxt = cur * impl_->gens[gi];
            if (mat->disc_index.count(nxt)) continue;
            require(mat->discovered.size() < impl_->cap, ErrorKind::OrderCapExceeded,
                    "group order exceeds cap " + std::to_string(impl_->cap));
            mat->disc_index.emplace(nxt, (int)mat->discovered.size());
            mat->discovered.push_back(std::move(nxt));
            mat->parent.emplace_back((int)head, (int)gi);
        }
    }
    mat->sorted = mat->discovered;
    std::sort(mat->sorted.begin(), mat->sorted.end());
    for (size_t i = 0; i < mat->sorted.size(); ++i)
        mat->index.emplace(mat->sorted[i], (int)i);
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->mat) impl_->mat = mat; // first writer wins
    return *impl_->mat;
}

size_t PermGroup::order() const { return materialized().sorted.size(); }
const std::vector<Perm>& PermGroup::elements() const { return materialized().sorted; }

bool PermGroup::contains(const Perm& g) const {
    if (g.degree() != degree()) return false;
    return materialized().index.count(g) > 0;
}

int PermGroup::element_index(const Perm& g) const {
    const auto& idx = materialized().index;
    auto it = idx.find(g);
    return it == idx.end() ? -1 : it->second;
}

bool PermGroup::is_abelian() const {
    const auto& gens = generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    return true;
}

std::vector<int> PermGroup::word_for(const Perm& g) const {
    const Mat& mat = materialized();
    auto it = mat.disc_index.find(g);
    require(it != mat.disc_index.end(), ErrorKind::InvalidArgument,
            "element not in group");
    std::vector<int> word;
    int cur = it->second;
    while (cur != 0) {
        word.push_back(mat.parent[(size_t)cur].second);
        cur = mat.parent[(size_t)cur].first;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

bool PermGroup::same_set(const PermGroup& o) const {
    if (degree() != o.degree() || order() != o.order()) return false;
    return elements() == o.elements();
}

bool PermGroup::is_subgroup_of(const PermGroup& G) const {
    if (degree() != G.degree()) return false;
    for (const auto& g : generators())
        if (!G.contains(g)) return false;
    return true;
}

bool PermGroup::is_normal_in(const PermGroup& G) const {
    if (!is_subgroup_of(G)) return false;
    for (const auto& g : G.generators()) {
        for (const auto& h : generators())
            if (!contains(h.conjugated_by(g))) return false;
    }
    return true;
}

std::vector<std::vector<int>> PermGroup::conjugacy_classes() const {
    const auto& elems = elements();
    std::vector<int> cls(elems.size(), -1);
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (cls[i] >= 0) continue;
        int id = (int)classes.size();
        classes.push_back({});
        // orbit of elems[i] under conjugation by generators
        std::vector<int> queue{(int)i};
        cls[i] = id;
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            classes[(size_t)id].push_back(cur);
            for (const auto& g : generators()) {
                Perm c = elems[(size_t)cur].conjugated_by(g);
                int ci = element_index(c);
                if (cls[(size_t)ci] < 0) {
                    cls[(size_t)ci] = id;
                    queue.push_back(ci);
                }
            }
        }
        std::sort(classes[(size_t)id].begin(), classes[(size_t)id].end());
    }
    return classes;
}

std::vector<long> PermGroup::element_order_multiset() const {
    std::vector<long> orders;
    for (const auto& e : elements()) orders.push_back(e.order());
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::vector<Perm> small_generating_set(int degree, const std::vector<Perm>& elements,
                                       size_t cap) {
    if (cap == 0) cap = elements.size() + 1;
    std::vector<Perm> gens;
    PermGroup cur = PermGroup::trivial(degree);
    for (const auto& e : elements) {
        if (e.is_identity() || cur.contains(e)) continue;
        gens.push_back(e);
        cur = PermGroup(degree, gens, cap);
    }
    return gens;
}

PermGroup subgroup_generated(int degree, const std::vector<Perm>& gens, size_t cap) {
    std::vector<Perm> keep;
    for (const auto& g : gens)
        if (!g.is_identity()) keep.push_back(g);
    return PermGroup(degree, keep, cap);
}

GroupHom::GroupHom(PermGroup dom, PermGroup cod, std::unordered_map<Perm, Perm, PermHash> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {}

std::optional<GroupHom> GroupHom::try_from_generator_images(const PermGroup& dom,
                                                            const PermGroup& cod,
                                                            const std::vector<Perm>& gen_images) {
    if (gen_images.size() != dom.generators().size()) return std::nullopt;
    for (const auto& im : gen_images)
        if (!cod.contains(im)) return std::nullopt;
    std::unordered_map<Perm, Perm, PermHash> table;
    table.reserve(dom.order());
    table.emplace(dom.identity(), cod.identity());
    // extend along BFS words, then verify the telescoping condition
    for (const auto& x : dom.elements()) {
        if (table.count(x)) continue;
        std::vector<int> word = dom.word_for(x);
        Perm img = cod.identity();
        for (int gi : word) img = img * gen_images[(size_t)gi];
        table.emplace(x, std::move(img));
    }
    for (const auto& x : dom.elements()) {
        const Perm& fx = table.at(x);
        for (size_t gi = 0; gi < dom.generators().size(); ++gi) {
            Perm lhs = table.at(x * dom.generators()[gi]);
            if (lhs != fx * gen_images[gi]) return std::nullopt;
        }
    }
    return GroupHom(dom, cod, std::move(table));
}

GroupHom GroupHom::from_generator_images(const PermGroup& dom, const PermGroup& cod,
                                         const std::vector<Perm>& gen_images) {
    auto h = try_from_generator_images(dom, cod, gen_images);
    require(h.has_value(), ErrorKind::NotHomomorphic,
            "generator images do not extend to a homomorphism");
    return *h;
}

GroupHom GroupHom::from_function(const PermGroup& dom, const PermGroup& cod,
                                 const std::function<Perm(const Perm&)>& f) {
    std::vector<Perm> images;
    for (const auto& g : dom.generators()) images.push_back(f(g));
    return from_generator_images(dom, cod, images);
}

Perm GroupHom::operator()(const Perm& x) const {
    auto it = table_.find(x);
    require(it != table_.end(), ErrorKind::InvalidArgument, "element outside hom domain");
    return it->second;
}

PermGroup GroupHom::image() const {
    std::vector<Perm> images;
    for (const auto& g : dom_.generators()) images.push_back((*this)(g));
    return subgroup_generated(cod_.degree(), images, cod_.order_cap());
}

PermGroup GroupHom::kernel() const {
    std::vector<Perm> ker;
    for (const auto& x : dom_.elements())
        if ((*this)(x).is_identity()) ker.push_back(x);
    auto gens = small_generating_set(dom_.degree(), ker);
    return PermGroup(dom_.degree(), gens, dom_.order_cap());
}

bool GroupHom::is_surjective() const { return image().order() == cod_.order(); }

bool GroupHom::is_injective() const { return kernel().order() == 1; }

GroupHom GroupHom::compose(const GroupHom& outer, const GroupHom& inner) {
    std::vector<Perm> images;
    for (const auto& g : inner.domain().generators()) images.push_back(outer(inner(g)));
    return from_generator_images(inner.domain(), outer.codomain(), images);
}

} // namespace grp
} // namespace wittlab
