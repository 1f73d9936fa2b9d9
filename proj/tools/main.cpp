// wittlab command-line front door: parses ring/group descriptors, dispatches
// to the library and prints one deterministic JSON report per run.

#include <atomic>
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wittlab/asw.hpp"
#include "wittlab/curves.hpp"
#include "wittlab/descriptor.hpp"
#include "wittlab/embed.hpp"
#include "wittlab/groups.hpp"
#include "wittlab/patchsim.hpp"

using json = nlohmann::json;
using namespace wittlab;

namespace {

constexpr int kDefaultMaxWittLength = 5;

struct Options {
    bool pretty = false;
    int jobs = 1;
    long seed = 0;
    int max_n = kDefaultMaxWittLength;
};

std::string big_str(const BigInt& v) { return v.get_str(); }
std::string rat_str(const BigRat& v) { return v.get_str(); }

Mode parse_mode(const std::string& mode) {
    if (mode == "geometric") return Mode::Geometric;
    if (mode == "arithmetic") return Mode::Arithmetic;
    raise(ErrorKind::InvalidArgument, "mode must be geometric or arithmetic");
}

json witt_vector_json(const asw::WV& v) {
    json arr = json::array();
    for (int i = 0; i < v.length(); ++i) arr.push_back(v[i].to_string());
    return arr;
}

json cokernel_json(const asw::CokernelStructure& cs) {
    json j;
    j["invariant_factors"] = json::array();
    for (const auto& f : cs.invariant_factors()) j["invariant_factors"].push_back(big_str(f));
    j["exponents"] = cs.exponents;
    j["generators"] = cs.generator_names;
    j["order"] = big_str(cs.order());
    return j;
}

json group_json(const grp::PermGroup& G) {
    json j;
    j["degree"] = G.degree();
    j["order"] = (uint64_t)G.order();
    json gens = json::array();
    for (const auto& g : G.generators()) gens.push_back(g.cycles());
    j["generators"] = gens;
    return j;
}

json ring_inputs(const RingPtr& ring, const Options& opt) {
    json j;
    j["ring"] = ring->describe();
    j["mode"] = ring->mode() == Mode::Geometric ? "geometric" : "arithmetic";
    j["p"] = ring->field()->p();
    j["q"] = (uint64_t)ring->field()->q();
    j["seed"] = opt.seed;
    return j;
}

void pretty_table(const std::string& prefix, const json& j) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            pretty_table(prefix.empty() ? k : prefix + "." + k, v);
    } else if (j.is_array()) {
        std::cout << "  " << prefix << " =";
        for (const auto& v : j)
            std::cout << " " << (v.is_string() ? v.get<std::string>() : v.dump());
        std::cout << "\n";
    } else {
        std::cout << "  " << prefix << " = "
                  << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& inputs, const json& result, const json& certificates,
          std::chrono::steady_clock::time_point start, const Options& opt,
          const std::string& pretty_text = "") {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (opt.pretty) {
        if (!pretty_text.empty()) {
            std::cout << pretty_text;
        } else {
            pretty_table("", result);
            if (!certificates.empty()) {
                std::cout << "certificates:\n";
                pretty_table("", certificates);
            }
        }
        return;
    }
    json out;
    out["inputs"] = inputs;
    out["result"] = result;
    out["certificates"] = certificates;
    out["timing_ms"] = (int64_t)ms;
    std::cout << out.dump(2) << "\n";
}

grp::PermGroup parse_subgroup(const grp::PermGroup& ambient, const std::string& gens_text) {
    auto gens = parse_perm_list(gens_text, ambient.degree());
    for (const auto& g : gens)
        require(ambient.contains(g), ErrorKind::NotSubgroup,
                "generator outside the ambient group: " + g.cycles());
    return grp::subgroup_generated(ambient.degree(), gens, ambient.order_cap());
}

// ---------------------------------------------------------------------------
// witt subcommands
// ---------------------------------------------------------------------------

int run_witt(const std::string& op, const std::string& ring_text, const std::string& mode,
             const std::string& u_text, const std::string& v_text, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    RingPtr ring = parse_ring_descriptor(ring_text, parse_mode(mode));
    asw::WV u = parse_witt_vector(u_text, ring);
    require(u.length() <= opt.max_n, ErrorKind::InvalidArgument,
            "Witt length exceeds --max-n (cache sizes blow up; raise it knowingly)");
    json inputs = ring_inputs(ring, opt);
    inputs["n"] = u.length();
    inputs["u"] = u_text;
    json result, certs;
    if (op == "pmap") {
        asw::WV r = witt::p_map(u);
        result["p_map"] = witt_vector_json(r);
    } else {
        asw::WV v = parse_witt_vector(v_text, ring);
        require(v.length() == u.length(), ErrorKind::LengthMismatch,
                "u and v must have equal length");
        inputs["v"] = v_text;
        asw::WV r = op == "add" ? witt::witt_add(u, v) : witt::witt_mul(u, v);
        result[op == "add" ? "sum" : "product"] = witt_vector_json(r);
    }
    certs["structure_cache"] = "ghost-solved structure polynomials, integral by construction";
    emit(inputs, result, certs, start, opt);
    return 0;
}

// ---------------------------------------------------------------------------
// asw subcommands
// ---------------------------------------------------------------------------

json cokernel_grid(const RingPtr& ring, int n, int d, int jobs) {
    struct Cell {
        int n, d;
        json value;
    };
    std::vector<Cell> cells;
    for (int nn = 1; nn <= n; ++nn)
        for (int dd = 1; dd <= d; ++dd) cells.push_back({nn, dd, {}});
    int workers = std::max(1, jobs);
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            cells[i].value = cokernel_json(
                asw::cokernel_basis(ring, cells[i].n, asw::Window{cells[i].d}));
        }
    };
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    json grid;
    for (const auto& c : cells)
        grid["n=" + std::to_string(c.n) + ",d=" + std::to_string(c.d)] = c.value;
    return grid;
}

int run_asw(const std::string& op, const std::string& ring_text, const std::string& mode,
            int n, int d, long genus, bool grid, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    RingPtr ring = parse_ring_descriptor(ring_text, parse_mode(mode));
    require(n >= 1 && n <= opt.max_n, ErrorKind::InvalidArgument,
            "level n out of range (see --max-n)");
    require(d >= 0, ErrorKind::InvalidArgument, "window degree must be >= 0");
    json inputs = ring_inputs(ring, opt);
    inputs["n"] = n;
    inputs["d"] = d;
    json result, certs;
    std::string pretty;
    if (op == "cokernel") {
        if (grid) {
            result["grid"] = cokernel_grid(ring, n, d, opt.jobs);
        } else {
            auto cs = asw::cokernel_basis(ring, n, asw::Window{d});
            result = cokernel_json(cs);
            std::ostringstream os;
            os << "W_" << n << "(A)/P(W_" << n << "(A)) within window d=" << d << ": ";
            os << cs.order().get_str() << " classes; invariant factors";
            for (const auto& f : cs.invariant_factors()) os << " " << f.get_str();
            os << "; generators";
            for (const auto& g : cs.generator_names) os << " " << g;
            os << "\n";
            pretty = os.str();
        }
        certs["verschiebung_descends"] = true;
    } else if (op == "covers") {
        auto cc = asw::count_cyclic_covers(ring, n, asw::Window{d});
        result["total"] = big_str(cc.total);
        result["surjective"] = big_str(cc.surjective);
    } else if (op == "report") {
        auto rep = asw::abelianization_report(genus, ring, n, asw::Window{d});
        inputs["genus"] = genus;
        result["prime_to_p_rank"] = rep.prime_to_p_rank;
        result["punctures"] = rep.punctures;
        json levels = json::array();
        for (const auto& cs : rep.p_part) {
            json lv = cokernel_json(cs);
            lv["level"] = cs.n;
            levels.push_back(lv);
        }
        result["p_part"] = levels;
    } else {
        raise(ErrorKind::InvalidArgument, "unknown asw operation");
    }
    emit(inputs, result, certs, start, opt, pretty);
    return 0;
}

// ---------------------------------------------------------------------------
// group subcommands
// ---------------------------------------------------------------------------

int run_group(const std::string& op, const std::string& group_text, uint32_t p, int m,
              const std::string& orders_text, int cap_k, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    json inputs, result, certs;
    inputs["seed"] = opt.seed;
    if (op == "heisenberg") {
        inputs["p"] = p;
        grp::PermGroup B = [&] {
            if (!orders_text.empty()) {
                std::vector<long> orders;
                for (const auto& part : [&] {
                         std::vector<std::string> ps;
                         std::string cur;
                         for (char c : orders_text) {
                             if (c == ',') {
                                 ps.push_back(cur);
                                 cur.clear();
                             } else
                                 cur.push_back(c);
                         }
                         ps.push_back(cur);
                         return ps;
                     }())
                    orders.push_back(std::stol(part));
                auto A = grp::AbelianType::from_orders(orders);
                inputs["orders"] = orders;
                return grp::heisenberg_product(p, A);
            }
            inputs["m"] = m;
            return grp::heisenberg(p, m);
        }();
        result["order"] = (uint64_t)B.order();
        auto comm = grp::commutator_subgroup(B);
        result["commutator_type"] = grp::abelian_invariants(comm).to_string();
        result["abelianization"] = grp::abelianization(B).to_string();
        certs["commutator_order"] = (uint64_t)comm.order();
        emit(inputs, result, certs, start, opt);
        return 0;
    }

    grp::PermGroup G = parse_group_descriptor(group_text);
    inputs["group"] = group_text;
    inputs["degree"] = G.degree();
    inputs["order"] = (uint64_t)G.order();
    if (op == "quasip") {
        inputs["p"] = p;
        auto Q = grp::quasi_p_part(G, p);
        result = group_json(Q);
        certs["normal"] = Q.is_normal_in(G);
        certs["quotient_order_prime_to_p"] = (G.order() / Q.order()) % p != 0;
    } else if (op == "perfect") {
        auto comm = grp::commutator_subgroup(G);
        result["perfect"] = comm.order() == G.order();
        result["commutator_order"] = (uint64_t)comm.order();
        result["abelianization"] = grp::abelianization(G).to_string();
    } else if (op == "minnormal") {
        json list = json::array();
        for (const auto& mn : grp::minimal_normal_subgroups(G)) {
            json e;
            e["order"] = (uint64_t)mn.subgroup.order();
            e["simple_order"] = (uint64_t)mn.simple_order;
            e["multiplicity"] = mn.multiplicity;
            e["kind"] = mn.simple_abelian ? "elementary_abelian" : "nonabelian_simple_power";
            list.push_back(e);
        }
        result["minimal_normal_subgroups"] = list;
    } else if (op == "mingen") {
        auto mg = grp::min_generators(G, cap_k);
        result["d"] = mg.d;
        json gens = json::array();
        for (const auto& g : mg.generating_set) gens.push_back(g.cycles());
        result["generating_set"] = gens;
        inputs["cap_k"] = cap_k;
    } else {
        raise(ErrorKind::InvalidArgument, "unknown group operation");
    }
    emit(inputs, result, certs, start, opt);
    return 0;
}

// ---------------------------------------------------------------------------
// embed subcommands
// ---------------------------------------------------------------------------

json tree_json(const embed::ReductionNode& node) {
    json j;
    j["gamma_order"] = (uint64_t)node.problem.gamma.order();
    j["g_order"] = (uint64_t)node.problem.quotient.order();
    j["kernel_order"] = (uint64_t)node.problem.kernel.order();
    if (node.is_leaf()) {
        j["case"] = embed::kernel_case_name(*node.leaf_case);
    } else if (!node.children.empty()) {
        j["h1_order"] = (uint64_t)node.h1_order;
        json kids = json::array();
        for (const auto& c : node.children) kids.push_back(tree_json(c));
        j["children"] = kids;
    }
    return j;
}

int run_embed(const std::string& op, const std::string& gamma_text,
              const std::string& kernel_text, const std::string& gp_text,
              const std::string& group_text, uint32_t p, long genus, long punctures,
              const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    json inputs, result, certs;
    inputs["seed"] = opt.seed;
    if (op == "abhyankar") {
        grp::PermGroup G = parse_group_descriptor(group_text);
        inputs["group"] = group_text;
        inputs["p"] = p;
        inputs["genus"] = genus;
        inputs["punctures"] = punctures;
        auto res = embed::abhyankar_quotient_check(G, p, genus, punctures);
        result["ok"] = res.ok;
        result["bound"] = res.bound;
        result["quotient_order"] = (uint64_t)res.quotient_order;
        if (res.ok) {
            result["d"] = res.d;
            json cert = json::array();
            for (const auto& g : res.certificate) cert.push_back(g.cycles());
            certs["generating_set_of_quotient"] = cert;
        } else {
            certs["exhausted_up_to"] = res.bound;
        }
        emit(inputs, result, certs, start, opt);
        return 0;
    }

    grp::PermGroup gamma = parse_group_descriptor(gamma_text);
    grp::PermGroup kernel = parse_subgroup(gamma, kernel_text);
    inputs["gamma"] = gamma_text;
    inputs["kernel"] = kernel_text;
    auto ep = embed::EmbeddingProblem::from_normal(gamma, kernel);
    if (op == "reduce") {
        inputs["p"] = p;
        auto tree = embed::reduction_tree(ep, p);
        result["tree"] = tree_json(tree.root);
        result["depth"] = tree.depth;
        json cases = json::array();
        for (auto c : tree.leaf_cases) cases.push_back(embed::kernel_case_name(c));
        result["leaf_cases"] = cases;
        certs["leaf_kernel_order_product"] = big_str(tree.leaf_kernel_order_product);
        certs["kernel_order"] = (uint64_t)ep.kernel.order();
    } else if (op == "splitify") {
        grp::PermGroup Gp = parse_subgroup(gamma, gp_text);
        inputs["gp"] = gp_text;
        auto res = embed::splitify(ep, Gp);
        result["gamma_prime_order"] = (uint64_t)res.split_problem.gamma.order();
        result["kernel_order"] = (uint64_t)res.split_problem.kernel.order();
        result["g_order"] = (uint64_t)res.split_problem.quotient.order();
        result["split"] = res.split_problem.split_witness.has_value();
        certs["beta_surjective"] = res.beta.is_surjective();
    } else {
        raise(ErrorKind::InvalidArgument, "unknown embed operation");
    }
    emit(inputs, result, certs, start, opt);
    return 0;
}

// ---------------------------------------------------------------------------
// patch subcommands
// ---------------------------------------------------------------------------

int run_patch(const std::string& op, const std::string& gamma_text, const std::string& g_text,
              const std::string& h_text, const std::string& sub_text, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    json inputs, result, certs;
    inputs["seed"] = opt.seed;
    grp::PermGroup gamma = parse_group_descriptor(gamma_text);
    inputs["gamma"] = gamma_text;
    if (op == "components") {
        grp::PermGroup G = parse_subgroup(gamma, g_text);
        grp::PermGroup H = parse_subgroup(gamma, h_text);
        inputs["g"] = g_text;
        inputs["h"] = h_text;
        patch::PatchDiagram d{gamma, G, H, patch::GSet::regular(G), patch::GSet::regular(H), 0, 0};
        auto res = patch::patch_components(d);
        result["components"] = res.components;
        result["generated_order"] = (uint64_t)res.generated.order();
        result["index"] = (uint64_t)(gamma.order() / res.generated.order());
    } else if (op == "induce") {
        grp::PermGroup G = parse_subgroup(gamma, sub_text);
        inputs["sub"] = sub_text;
        patch::GSet X = patch::GSet::regular(G);
        patch::GSet ind = patch::induce(gamma, G, X);
        result["points"] = ind.points();
        json orbit_sizes = json::array();
        for (const auto& o : ind.orbits()) orbit_sizes.push_back(o.size());
        result["orbit_sizes"] = orbit_sizes;
        result["transitive"] = ind.transitive();
        certs["isomorphic_to_regular_gamma_set"] =
            patch::is_isomorphic_gsets(ind, patch::GSet::regular(gamma));
    } else {
        raise(ErrorKind::InvalidArgument, "unknown patch operation");
    }
    emit(inputs, result, certs, start, opt);
    return 0;
}

// ---------------------------------------------------------------------------
// curve subcommands
// ---------------------------------------------------------------------------

int run_curve(const std::string& op, long degree, long base_genus,
              const std::string& branch_text, uint32_t p, int n, const std::string& group_text,
              int l, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    json inputs, result, certs;
    inputs["seed"] = opt.seed;
    if (op == "hurwitz") {
        curves::RamificationProfile rp;
        rp.degree = degree;
        rp.base_genus = base_genus;
        // branch points separated by ';', indices within one fiber by '+'
        std::string cur;
        std::vector<std::string> fibers;
        for (char c : branch_text) {
            if (c == ';') {
                fibers.push_back(cur);
                cur.clear();
            } else
                cur.push_back(c);
        }
        if (!cur.empty()) fibers.push_back(cur);
        for (const auto& f : fibers) {
            curves::BranchPoint bp;
            std::string tok;
            for (char c : f + "+") {
                if (c == '+') {
                    if (!tok.empty()) bp.ram_indices.push_back(std::stol(tok));
                    tok.clear();
                } else
                    tok.push_back(c);
            }
            if (!bp.ram_indices.empty()) rp.branch_points.push_back(bp);
        }
        inputs["degree"] = degree;
        inputs["base_genus"] = base_genus;
        inputs["branch"] = branch_text;
        inputs["p"] = p;
        result["genus"] = curves::tame_hurwitz_genus(rp, p);
        certs["ramification_divisor_degree"] = rp.ramification_divisor_degree();
    } else if (op == "lemma67") {
        inputs["p"] = p;
        inputs["n"] = n;
        auto b = curves::lemma67_bound(p, n);
        curves::ASWCoverSpec spec{p, n};
        result["bound"] = rat_str(b.bound);
        result["genus_at_least"] = big_str(b.genus_at_least);
        result["equation"] = spec.equation();
        result["galois_group"] = spec.galois_group();
        certs["derivative"] = b.certificate.derivative;
        certs["unit_derivative"] = b.certificate.unit_derivative;
        certs["etale_away_from"] = "y=infinity";
        certs["totally_ramified_at"] = "y=0 (after translation)";
        certs["profile_bound"] =
            rat_str(curves::hurwitz_genus_rational(spec.finite_branch_profile(), p));
    } else if (op == "genus-for") {
        grp::PermGroup H = parse_group_descriptor(group_text);
        inputs["group"] = group_text;
        inputs["l"] = l;
        inputs["p"] = p;
        auto gc = curves::genus_needed_for(H, l, p);
        result["d"] = gc.d;
        result["genus"] = gc.genus;
    } else {
        raise(ErrorKind::InvalidArgument, "unknown curve operation");
    }
    emit(inputs, result, certs, start, opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wittlab: exact Artin-Schreier-Witt, group and genus computations"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Options opt;
    app.add_flag("--pretty", opt.pretty, "human-readable output instead of JSON");
    app.add_option("--jobs", opt.jobs, "worker threads for grid computations")
        ->check(CLI::Range(1, 256));
    app.add_option("--seed", opt.seed, "seed recorded in the report (no sampling by default)");
    app.add_option("--max-n", opt.max_n, "largest allowed Witt length (cache cost grows fast)");

    std::string ring_text, mode = "geometric", u_text, v_text;
    std::string group_text, gamma_text, kernel_text, gp_text, g_text, h_text, sub_text;
    std::string orders_text, branch_text;
    uint32_t p = 2;
    int n = 1, m = 1, d = 1, l = 1, cap_k = 8;
    long genus = 0, punctures = 1, degree = 1, base_genus = 0;

    // witt
    auto* witt_cmd = app.add_subcommand("witt", "truncated Witt vector arithmetic");
    witt_cmd->require_subcommand(1);
    for (const char* op : {"add", "mul", "pmap"}) {
        auto* c = witt_cmd->add_subcommand(op, op);
        c->add_option("--ring", ring_text, "ring descriptor F(p,m)[x,1/h]")->required();
        c->add_option("--mode", mode, "geometric|arithmetic");
        c->add_option("--u", u_text, "Witt vector [a1,...,an]")->required();
        if (std::string(op) != "pmap") c->add_option("--v", v_text, "second vector")->required();
    }

    // asw
    auto* asw_cmd = app.add_subcommand("asw", "Artin-Schreier-Witt cokernels");
    asw_cmd->require_subcommand(1);
    bool grid = false;
    for (const char* op : {"cokernel", "covers", "report"}) {
        auto* c = asw_cmd->add_subcommand(op, op);
        c->add_option("--ring", ring_text, "ring descriptor F(p,m)[x,1/h]")->required();
        c->add_option("--mode", mode, "geometric|arithmetic");
        c->add_option("--n", n, "Witt length")->required();
        c->add_option("--deg", d, "window degree bound")->required();
        if (std::string(op) == "cokernel") c->add_flag("--grid", grid, "compute the full (n,d) grid");
        if (std::string(op) == "report") c->add_option("--genus", genus, "genus for the tame part");
    }

    // group
    auto* group_cmd = app.add_subcommand("group", "finite permutation group queries");
    group_cmd->require_subcommand(1);
    for (const char* op : {"quasip", "perfect", "minnormal", "mingen", "heisenberg"}) {
        auto* c = group_cmd->add_subcommand(op, op);
        if (std::string(op) == "heisenberg") {
            c->add_option("--p", p, "prime")->required();
            c->add_option("--m", m, "Z/p^m side length");
            c->add_option("--orders", orders_text, "comma-separated cyclic p-power orders");
        } else {
            c->add_option("--group", group_text, "group descriptor deg=N; gens=...")->required();
            if (std::string(op) == "quasip") c->add_option("--p", p, "prime")->required();
            if (std::string(op) == "mingen") c->add_option("--cap", cap_k, "search bound");
        }
    }

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "embedding problem calculus");
    embed_cmd->require_subcommand(1);
    {
        auto* c = embed_cmd->add_subcommand("reduce", "reduction tree of the induction on |H|");
        c->add_option("--gamma", gamma_text, "group descriptor")->required();
        c->add_option("--kernel", kernel_text, "kernel generators (cycles)")->required();
        c->add_option("--p", p, "prime")->required();
        c = embed_cmd->add_subcommand("abhyankar", "Raynaud-Harbater quotient criterion");
        c->add_option("--group", group_text, "group descriptor")->required();
        c->add_option("--p", p, "prime")->required();
        c->add_option("--genus", genus, "curve genus")->required();
        c->add_option("--punctures", punctures, "number of punctures (>= 1)")->required();
        c = embed_cmd->add_subcommand("splitify", "split reduction via H x| Gp");
        c->add_option("--gamma", gamma_text, "group descriptor")->required();
        c->add_option("--kernel", kernel_text, "kernel generators")->required();
        c->add_option("--gp", gp_text, "generators of Gp")->required();
    }

    // patch
    auto* patch_cmd = app.add_subcommand("patch", "combinatorial patching model");
    patch_cmd->require_subcommand(1);
    {
        auto* c = patch_cmd->add_subcommand("components", "component count of the glued cover");
        c->add_option("--gamma", gamma_text, "group descriptor")->required();
        c->add_option("--g-gens", g_text, "generators of the X-side subgroup")->required();
        c->add_option("--h-gens", h_text, "generators of the Y-side subgroup")->required();
        c = patch_cmd->add_subcommand("induce", "induced cover of a regular subgroup cover");
        c->add_option("--gamma", gamma_text, "group descriptor")->required();
        c->add_option("--sub", sub_text, "generators of the subgroup")->required();
    }

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "exact genus arithmetic");
    curve_cmd->require_subcommand(1);
    {
        auto* c = curve_cmd->add_subcommand("hurwitz", "tame Riemann-Hurwitz genus");
        c->add_option("--degree", degree, "cover degree N")->required();
        c->add_option("--base-genus", base_genus, "genus of the base");
        c->add_option("--branch", branch_text, "fibers 'e+e+...;e+...' over branch points")
            ->required();
        c->add_option("--p", p, "characteristic (tameness check)")->required();
        c = curve_cmd->add_subcommand("lemma67", "explicit abelian cover family bound");
        c->add_option("--p", p, "prime")->required();
        c->add_option("--n", n, "exponent n")->required();
        c = curve_cmd->add_subcommand("genus-for", "genus needed for an etale H^l-cover source");
        c->add_option("--group", group_text, "group descriptor for H")->required();
        c->add_option("--l", l, "multiplicity")->required();
        c->add_option("--p", p, "prime")->required();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (witt_cmd->parsed()) {
            for (const char* op : {"add", "mul", "pmap"})
                if (witt_cmd->get_subcommand(op)->parsed())
                    return run_witt(op, ring_text, mode, u_text, v_text, opt);
        }
        if (asw_cmd->parsed()) {
            for (const char* op : {"cokernel", "covers", "report"})
                if (asw_cmd->get_subcommand(op)->parsed())
                    return run_asw(op, ring_text, mode, n, d, genus, grid, opt);
        }
        if (group_cmd->parsed()) {
            for (const char* op : {"quasip", "perfect", "minnormal", "mingen", "heisenberg"})
                if (group_cmd->get_subcommand(op)->parsed())
                    return run_group(op, group_text, p, m, orders_text, cap_k, opt);
        }
        if (embed_cmd->parsed()) {
            for (const char* op : {"reduce", "abhyankar", "splitify"})
                if (embed_cmd->get_subcommand(op)->parsed())
                    return run_embed(op, gamma_text, kernel_text, gp_text, group_text, p, genus,
                                     punctures, opt);
        }
        if (patch_cmd->parsed()) {
            for (const char* op : {"components", "induce"})
                if (patch_cmd->get_subcommand(op)->parsed())
                    return run_patch(op, gamma_text, g_text, h_text, sub_text, opt);
        }
        if (curve_cmd->parsed()) {
            for (const char* op : {"hurwitz", "lemma67", "genus-for"})
                if (curve_cmd->get_subcommand(op)->parsed())
                    return run_curve(op, degree, base_genus, branch_text, p, n, group_text, l,
                                     opt);
        }
        raise(ErrorKind::InvalidArgument, "no subcommand given");
    } catch (const Error& e) {
        json out;
        out["error"]["kind"] = e.kind_name();
        out["error"]["message"] = e.what();
        std::cout << out.dump(2) << "\n";
        return e.is_cap() ? 3 : 2;
    } catch (const std::exception& e) {
        json out;
        out["error"]["kind"] = "Internal";
        out["error"]["message"] = e.what();
        std::cout << out.dump(2) << "\n";
        return 2;
    }
    return 0;
}
