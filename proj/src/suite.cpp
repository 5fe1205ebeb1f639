#include "plk/suite.hpp"

#include "plk/complex.hpp"
#include "plk/corpus.hpp"
#include "plk/errors.hpp"
#include "plk/fixtures.hpp"
#include "plk/homology.hpp"
#include "plk/lift.hpp"
#include "plk/nerve.hpp"
#include "plk/pl_geometry.hpp"
#include "plk/prism.hpp"
#include "plk/simplicial_set.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace plk {

namespace {

using Clock = std::chrono::steady_clock;

// Collects failures; the first few end up in the detail line.
struct Tally {
    std::size_t checks = 0, failures = 0;
    std::vector<std::string> first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (first.size() < 3) first.push_back(what);
    }
    CriterionResult result(std::string detail) const {
        CriterionResult r;
        r.pass = failures == 0;
        if (!r.pass) {
            detail += "; " + std::to_string(failures) + " failure(s)";
            for (const auto& f : first) detail += "; " + f;
        }
        r.detail = std::move(detail);
        return r;
    }
};

bool pure_of_dim(const EuclideanComplex& k, std::size_t d) {
    auto tops = k.base().maximal_simplices();
    return !tops.empty() &&
           std::all_of(tops.begin(), tops.end(), [&](const Simplex& s) { return s.size() == d + 1; });
}

CriterionResult prism_triangulation() {
    Tally t;
    auto start = Clock::now();
    for (std::size_t p = 0; p <= 5; ++p) {
        const auto& r = build_R(p);
        auto tag = "p=" + std::to_string(p);
        auto v = validate(r.complex);
        t.expect(v.ok, tag + " invalid: " + v.reason);
        t.expect(total_volume(r.complex) == Rational(1) / Rational(factorial(p)), tag + " volume");
        t.expect(r.complex.base().euler_characteristic() == 1, tag + " chi");
        t.expect(homology(delta_set_of(r.complex.base())) == betti_profile({1}), tag + " homology");
    }
    std::chrono::duration<double> took = Clock::now() - start;
    t.expect(took.count() < 30.0, "runtime over 30 s");
    return t.result("p=0..5 valid, volume 1/p!, chi=1, acyclic, under 30 s");
}

CriterionResult r1_counts() {
    Tally t;
    const auto& r1 = build_R(1);
    auto f = r1.complex.base().f_vector();
    t.expect(f == std::vector<std::size_t>{5, 7, 3}, "f-vector");
    std::set<std::set<std::string>> tris;
    for (const auto& s : r1.complex.base().simplices(2)) {
        std::set<std::string> l;
        for (auto v : s) l.insert(r1.label(v));
        tris.insert(l);
    }
    std::set<std::set<std::string>> expected{{"(e0,0)", "(e1,0)", "(b{0,1},1)"},
                                             {"(e0,0)", "(b{0},1)", "(b{0,1},1)"},
                                             {"(e1,0)", "(b{1},1)", "(b{0,1},1)"}};
    t.expect(tris == expected, "triangle vertex sets");
    std::ostringstream d;
    d << "vertices=" << f.at(0) << " edges=" << f.at(1) << " triangles=" << f.at(2);
    return t.result(d.str());
}

CriterionResult cosimplicial() {
    Tally t;
    for (std::size_t p = 0; p <= 3; ++p) {
        auto id = build_R_map(identity_map(p), p);
        t.expect(id.delta() == DeltaMorphism::identity(delta_set_of(build_R(p).complex.base())),
                 "R(id) p=" + std::to_string(p));
    }
    std::size_t pairs = 0;
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; q <= 3; ++q)
            for (const auto& eta : monotone_maps(p, q)) {
                auto fe = build_R_map(eta, q);
                for (std::size_t r = 0; r <= 3; ++r)
                    for (const auto& delta : monotone_maps(q, r)) {
                        auto fd = build_R_map(delta, r);
                        auto fde = build_R_map(compose(delta, eta), r);
                        bool ok = true;
                        for (const auto& s : build_R(p).complex.base().all_simplices())
                            if (fde(s) != fd(fe(s))) ok = false;
                        t.expect(ok, "composite mismatch at p=" + std::to_string(p) + " q=" +
                                         std::to_string(q) + " r=" + std::to_string(r));
                        ++pairs;
                    }
            }
    return t.result(std::to_string(pairs) + " composable pairs, identities for p<=3");
}

CriterionResult f_isomorphism() {
    Tally t;
    for (std::size_t p = 0; p <= 4; ++p) {
        const auto& k = build_K(p);
        auto tag = "p=" + std::to_string(p);
        t.expect(k.complex.base().count(p + 1) == p + 1, tag + " top count");
        auto rep = check_F(build_F(p), p + 2);
        t.expect(rep.ok, tag + ": " + rep.message);
    }
    std::size_t squares = 0;
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; q <= 3; ++q)
            for (const auto& eta : monotone_maps(q, p)) {
                auto rep = check_F_naturality(eta, p, q + 2);
                t.expect(rep.ok, rep.message);
                ++squares;
            }
    t.expect(squares == 121, "square count");
    return t.result("p<=4 bijective and equivariant, K^p has p+1 tops, " + std::to_string(squares) +
                    " naturality squares");
}

CriterionResult subdivision_invariance() {
    Tally t;
    auto start = Clock::now();
    std::size_t n = 0;
    for (const auto& [name, x] : corpus::homology_corpus()) {
        auto h = homology(x);
        for (std::size_t r = 1; r <= 2; ++r)
            t.expect(homology(sd_delta_power(x, r)) == h, name + " sd^" + std::to_string(r));
        ++n;
    }
    auto rp2 = homology(sd_delta_power(corpus::delta_rp2(), 2));
    t.expect(rp2.degrees.size() > 1 && rp2.degrees[1] == DegreeHomology{0, {Integer(2)}}, "RP2 torsion");
    std::chrono::duration<double> took = Clock::now() - start;
    t.expect(took.count() < 60.0, "runtime over 60 s");
    return t.result(std::to_string(n) + " complexes, r=1,2, RP2 H_1 = Z/2, under 60 s");
}

CriterionResult subdivision_lift_fixtures() {
    Tally t;
    auto fx = fixtures::lift_fixtures();
    t.expect(fx.size() == 10, "fixture count");
    for (const auto& f : fx) {
        const auto& w = f.family;
        auto c = classify(w);
        auto g = subdivision_lift(c, w, 1);
        for (const auto& rep : {check_classification(g), check_forced_by_top(g), check_lift_compatibility(c, g),
                                check_reassembly(g, w)})
            t.expect(rep.ok, f.name + ": " + rep.message);
    }
    return t.result(std::to_string(fx.size()) + " families, r=1 lift reassembles and is forced by tops");
}

CriterionResult pullback_laws() {
    Tally t;
    auto inst = fixtures::pullback_instances(20240611u, 25);
    t.expect(inst.size() == 25, "instance count");
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& [w, f, g] = inst[i];
        auto tag = "instance " + std::to_string(i);
        t.expect(same_family(pullback(identity_affine(w.base), w), w), tag + " identity");
        t.expect(same_family(pullback(g, pullback(f, w)), pullback(compose(f, g), w)), tag + " composition");
    }
    return t.result(std::to_string(inst.size()) + " instances, seed 20240611");
}

CriterionResult regular_fibers() {
    Tally t;
    auto fx = fixtures::fiber_fixtures();
    for (const auto& f : fx) {
        auto r = regular_fiber(f.map, f.lambda);
        t.expect(r.certified, f.name + ": " + r.message);
        t.expect(pure_of_dim(r.fiber, f.fiber_dim), f.name + " fiber dimension");
    }
    auto hex = regular_fiber(fixtures::hexagon_height(), Point{Rational(1, 2)});
    t.expect(hex.fiber.base().f_vector() == std::vector<std::size_t>{2}, "hexagon fiber not 2 points");
    return t.result(std::to_string(fx.size()) + " fixtures certified, hexagon fiber is 2 points");
}

CriterionResult kan_filling() {
    Tally t;
    auto fx = fixtures::horn_fixtures();
    for (const auto& f : fx) {
        auto filled = horn_fill_family(f.family, f.p, f.j);
        t.expect(same_family(restrict_to_horn(filled, f.p, f.j), f.family), f.name);
    }
    auto bg = group_nerve({{0, 1}, {1, 0}}, 4);
    std::size_t horns = 0;
    for (std::size_t p = 1; p <= 3; ++p) {
        auto lower = bg.simplices(p - 1);
        for (std::size_t j = 0; j <= p; ++j) {
            std::vector<std::size_t> pick(p + 1, 0);
            for (;;) {
                std::vector<NormalForm> faces;
                for (std::size_t i = 0; i <= p; ++i) faces.push_back(lower[pick[i]]);
                try {
                    auto fill = kan_fill(bg, p, j, faces);
                    ++horns;
                    t.expect(fill.has_value(), "Z/2 horn p=" + std::to_string(p) + " j=" + std::to_string(j));
                } catch (const ValidityError&) {
                    // not a horn
                }
                std::size_t i = 0;
                while (i <= p) {
                    if (i == j) {
                        ++i;
                        continue;
                    }
                    if (++pick[i] < lower.size()) break;
                    pick[i++] = 0;
                }
                if (i > p) break;
            }
        }
    }
    auto path = fixtures::directed_path();
    t.expect(!kan_fill(path, 2, 0, {0, 0, 0}), "directed path Λ^2_0 filled");
    t.expect(!kan_fill(path, 2, 2, {1, 1, 0}), "directed path Λ^2_2 filled");
    return t.result(std::to_string(fx.size()) + " family horns, " + std::to_string(horns) +
                    " Z/2 horns filled, directed path outer horns: none");
}

CriterionResult nerve_axioms() {
    Tally t;
    Category single{{"A", "B"}, {{"f", 0, 1}}, {}};
    Category loop{{"A"}, {{"e", 0, 0}}, {{{0, 0}, 0}}};
    std::vector<std::pair<std::string, Category>> positives{
        {"single", single}, {"chain", fixtures::chain_category()}, {"idempotent", loop}};
    for (const auto& [name, c] : positives) {
        t.expect(check_category(c).ok, name + " category");
        t.expect(check_identities(nerve(c, 4)).ok, name + " nerve");
    }
    std::vector<std::pair<std::string, Category>> violations{
        {"wrong target", fixtures::wrong_target_category()},
        {"non-associative", fixtures::non_associative_category()}};
    for (const auto& [name, c] : violations) {
        auto rep = check_category(c);
        t.expect(!rep.ok && !rep.witness.empty(), name + " category accepted");
        auto n = check_identities(nerve(c));
        t.expect(!n.ok, name + " nerve accepted");
    }
    auto demo = demo_cobordism_category();
    auto rep = check_category(demo.category);
    t.expect(rep.ok, "demo: " + rep.message);
    auto n = nerve(demo.category, 3);
    t.expect(check_identities(n).ok, "demo nerve");
    auto h = homology(n);
    t.expect(!h.degrees.empty() && h.degrees[0] == DegreeHomology{1, {}}, "demo H_0");
    return t.result("3 positive fixtures, 2 violations with witnesses, demo " +
                    std::to_string(demo.category.morphisms.size()) + " morphisms with H_0 = Z");
}

CriterionResult star_link_join() {
    Tally t;
    std::size_t n = 0;
    for (const auto& [name, c] : corpus::abstract_corpus())
        for (auto v : c.vertices()) {
            t.expect(star(v, c) == cone(v, link(v, c)), name + " vertex " + std::to_string(v));
            ++n;
        }
    for (const auto& [name, c] : corpus::euclidean_corpus())
        for (auto v : c.base().vertices()) {
            t.expect(star(v, c) == join(c.point(v), link(v, c), v), name + " vertex " + std::to_string(v));
            ++n;
        }
    return t.result(std::to_string(n) + " vertices");
}

CriterionResult guarded(const Criterion& c) {
    auto start = Clock::now();
    CriterionResult r;
    try {
        r = c.run();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = c.id;
    r.name = c.name;
    r.elapsed = Clock::now() - start;
    return r;
}

}  // namespace

std::vector<Criterion> criteria() {
    return {
        {1, "prism triangulation", prism_triangulation},
        {2, "R(1) counts", r1_counts},
        {3, "cosimplicial identities", cosimplicial},
        {4, "F isomorphism", f_isomorphism},
        {5, "subdivision invariance", subdivision_invariance},
        {6, "subdivision lift", subdivision_lift_fixtures},
        {7, "pullback functor laws", pullback_laws},
        {8, "regular fibers", regular_fibers},
        {9, "Kan filling", kan_filling},
        {10, "nerve axioms", nerve_axioms},
        {11, "star link join", star_link_join},
    };
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
    auto wanted = [&](int id) {
        return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), id) != opts.only.end();
    };
    auto run_all = [&] {
        std::vector<CriterionResult> out;
        for (const auto& c : criteria())
            if (wanted(c.id)) out.push_back(guarded(c));
        return out;
    };
    auto out = run_all();
    if (opts.determinism && wanted(12)) {
        auto start = Clock::now();
        auto again = run_all();
        CriterionResult d;
        d.id = 12;
        d.name = "determinism";
        d.pass = render_text(out) == render_text(again) && render_json(out) == render_json(again);
        d.detail = d.pass ? "second run renders byte-identical" : "second run differs";
        d.elapsed = Clock::now() - start;
        out.push_back(d);
    }
    return out;
}

std::string render_text(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const auto& r : results)
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << ": " << r.detail << '\n';
    out << (all_pass(results) ? "all criteria pass" : "some criteria fail") << '\n';
    return out.str();
}

std::string render_json(const std::vector<CriterionResult>& results) {
    nlohmann::ordered_json j;
    j["pass"] = all_pass(results);
    j["criteria"] = nlohmann::ordered_json::array();
    for (const auto& r : results)
        j["criteria"].push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    return j.dump(2) + "\n";
}

bool all_pass(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
}

}  // namespace plk
