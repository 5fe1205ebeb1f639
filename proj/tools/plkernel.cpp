#include "plk/complex.hpp"
#include "plk/errors.hpp"
#include "plk/homology.hpp"
#include "plk/io.hpp"
#include "plk/nerve.hpp"
#include "plk/pl_geometry.hpp"
#include "plk/prism.hpp"
#include "plk/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace plk;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    bool json = false;
    std::string output;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "1/2,3" -> (1/2, 3)
Point parse_point(const std::string& text) {
    Point p;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(parse_rational(tok));
    if (p.empty()) throw StructuralError("empty point '" + text + "'");
    return p;
}

MonotoneMap parse_map(const std::string& text) {
    MonotoneMap m;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto q = parse_rational(tok);
        if (denominator(q) != 1 || q < 0) throw StructuralError("bad map entry '" + tok + "'");
        m.push_back(static_cast<std::size_t>(numerator(q).convert_to<unsigned long>()));
    }
    if (m.empty()) throw StructuralError("empty map '" + text + "'");
    return m;
}

Json strings(const Point& p) {
    Json a = Json::array();
    for (const auto& q : p) a.push_back(to_string(q));
    return a;
}

Json complex_json(const EuclideanComplex& k) {
    Json j;
    j["ambient"] = k.ambient();
    j["f_vector"] = k.base().f_vector();
    Json verts = Json::array();
    for (std::size_t i = 0; i < k.base().vertices().size(); ++i)
        verts.push_back({{"id", k.base().vertices()[i]}, {"coords", strings(k.coords()[i])}});
    j["vertices"] = verts;
    j["simplices"] = k.base().maximal_simplices();
    return j;
}

Json family_json(const PolyhedralFamily& w) {
    return {{"fiber_ambient", w.fiber_ambient},
            {"base", complex_json(w.base)},
            {"refinement", complex_json(w.refinement)},
            {"total", complex_json(w.total)}};
}

// Text goes to -o when given, else stdout.
void emit_text(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw StructuralError("cannot write '" + o.output + "'");
    out << text;
}

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json)
        emit_text(o, j.dump(2) + "\n");
    else
        emit_text(o, text);
}

// Validity failure carrying a report already rendered for output.
struct Rejected {
    Json report;
    std::string text;
};

[[noreturn]] void reject(const Options& o, Json j, const std::string& text) {
    j["status"] = "invalid";
    throw Rejected{std::move(j), o.json ? "" : text};
}

PolyhedralFamily load_family(const std::string& path) {
    std::istringstream in(slurp(path));
    return read_family(in).family;
}

AffineSimplicialMap load_map(const std::string& path) {
    std::istringstream in(slurp(path));
    return read_map(in).map;
}

std::string complex_text(const std::string& name, const EuclideanComplex& k) {
    std::ostringstream out;
    write_complex(out, name, k);
    return out.str();
}

std::string family_text(const std::string& name, const PolyhedralFamily& w) {
    std::ostringstream out;
    write_family(out, name, w);
    return out.str();
}

std::string counts_line(const OrderedComplex& k) {
    static const char* names[] = {"vertices", "edges", "triangles", "tetrahedra"};
    auto f = k.f_vector();
    std::ostringstream out;
    for (std::size_t d = 0; d < f.size(); ++d) {
        if (d < 4)
            out << names[d];
        else
            out << "simplices" << d;
        out << "=" << f[d] << " ";
    }
    out << "chi=" << k.euler_characteristic() << "\n";
    return out.str();
}

void cmd_validate(const Options& o, const std::string& path) {
    auto [name, k] = load_complex(path);
    auto r = validate(k);
    Json j{{"name", name}, {"f_vector", k.base().f_vector()}, {"valid", r.ok}};
    if (!r.ok) {
        j["reason"] = r.reason;
        j["witness"] = r.witness;
        reject(o, j, "invalid: " + r.reason + "\nwitness: " + r.witness + "\n");
    }
    emit(o, j, "valid: " + counts_line(k.base()));
}

void cmd_subdivide(const Options& o, const std::string& path, std::size_t r) {
    auto [name, k] = load_complex(path);
    for (std::size_t i = 0; i < r; ++i) k = barycentric_subdivide(k);
    auto out = name + "_sd" + std::to_string(r);
    emit(o, Json{{"name", out}, {"complex", complex_json(k)}}, complex_text(out, k));
}

template <class Prism>
void emit_prism(const Options& o, const Prism& r, const std::string& name, bool counts, bool labels) {
    const auto& k = r.complex;
    Json j{{"name", name}, {"f_vector", k.base().f_vector()}, {"chi", k.base().euler_characteristic()}};
    if (labels) {
        Json l = Json::object();
        for (auto v : k.base().vertices()) l[std::to_string(v)] = r.label(v);
        j["labels"] = l;
    }
    if (!counts) j["complex"] = complex_json(k);
    std::string text;
    if (counts) {
        text = counts_line(k.base());
    } else {
        text = complex_text(name, k);
    }
    if (labels)
        for (auto v : k.base().vertices()) text += "# " + std::to_string(v) + " " + r.label(v) + "\n";
    emit(o, j, text);
}

void cmd_rmap(const Options& o, const std::string& eta_text, std::size_t q) {
    auto eta = parse_map(eta_text);
    auto f = build_R_map(eta, q);
    const auto& src = build_R(f.p);
    const auto& dst = build_R(q);
    Json images = Json::object();
    std::ostringstream text;
    text << "R(" << eta_text << ") : R(" << f.p << ") -> R(" << q << ")\n";
    for (auto v : src.complex.base().vertices()) {
        auto w = f.vertex_image[static_cast<std::size_t>(v)];
        images[src.label(v)] = dst.label(w);
        text << src.label(v) << " -> " << dst.label(w) << "\n";
    }
    auto rep = check_R_map(f);
    Json j{{"p", f.p}, {"q", q}, {"eta", eta}, {"images", images}, {"simplicial", rep.ok}};
    if (!rep.ok) {
        j["witness"] = rep.message;
        reject(o, j, text.str() + "not simplicial: " + rep.message + "\n");
    }
    emit(o, j, text.str());
}

void cmd_homology(const Options& o, const std::string& path, const std::string& set_name) {
    auto content = slurp(path);
    std::istringstream in(content);
    DeltaSet x;
    std::string name;
    std::string first, line;
    while (first.empty() && std::getline(in, line)) {
        std::istringstream ls(line);
        ls >> first;
        if (first.starts_with("#")) first.clear();
    }
    in.clear();
    in.seekg(0);
    if (first == "complex") {
        auto nc = read_complex(in);
        name = nc.name;
        x = delta_set_of(nc.complex.base());
    } else {
        auto b = read_delta_bundle(in);
        if (b.sets.empty()) throw StructuralError("no Δ-set in '" + path + "'");
        name = set_name.empty() ? b.sets.front().first : set_name;
        x = b.set(name);
    }
    auto id = check_identities(x);
    if (!id.ok) {
        Json j{{"name", name},
               {"witness",
                {{"degree", id.degree}, {"generator", id.generator}, {"i", id.i}, {"j", id.j}}},
               {"message", id.message}};
        reject(o, j, "face identity fails: " + id.message + "\n");
    }
    auto h = homology(x);
    Json degrees = Json::array();
    for (const auto& d : h.degrees) {
        Json t = Json::array();
        for (const auto& z : d.torsion) t.push_back(z.str());
        degrees.push_back({{"betti", d.betti}, {"torsion", t}});
    }
    auto lines = h.lines();
    std::string text;
    for (std::size_t i = 0; i < lines.size(); ++i) text += (i ? ", " : "") + lines[i];
    emit(o, Json{{"name", name}, {"homology", degrees}, {"chi", h.euler_characteristic()}}, text + "\n");
}

void cmd_nerve(const Options& o, const std::string& path, std::size_t max_degree) {
    std::istringstream in(slurp(path));
    auto c = read_category(in);
    auto rep = check_category(c);
    if (!rep.ok) {
        Json w = Json::array();
        std::string names;
        for (auto f : rep.witness) {
            w.push_back(c.morphisms[f].name);
            names += " " + c.morphisms[f].name;
        }
        reject(o, Json{{"message", rep.message}, {"witness", w}},
               "not a category: " + rep.message + "\nwitness:" + names + "\n");
    }
    auto n = nerve(c, max_degree);
    auto id = check_identities(n);
    if (!id.ok) reject(o, Json{{"message", id.message}}, "nerve identities fail: " + id.message + "\n");
    auto h = homology(n);
    std::ostringstream text;
    Json counts = Json::array();
    for (std::size_t k = 0; k <= max_degree; ++k) {
        counts.push_back(n.count(k));
        text << "strings_" << k << "=" << n.count(k) << "\n";
    }
    Json hs = Json::array();
    for (std::size_t k = 0; k < max_degree && k < h.degrees.size(); ++k) {
        hs.push_back(h.line(k));
        text << h.line(k) << "\n";
    }
    emit(o, Json{{"objects", c.objects.size()}, {"morphisms", c.morphisms.size()}, {"strings", counts},
                 {"homology", hs}},
         text.str());
}

void cmd_export_off(const Options& o, const std::string& which, std::size_t p, int precision) {
    if (p > 3) throw StructuralError("export-off supports p <= 3");
    if (precision < 1 || precision > 60) throw StructuralError("precision must be in 1..60");
    EuclideanComplex k;
    if (which == "R")
        k = build_R(p).complex;
    else if (which == "K")
        k = build_K(p).complex;
    else
        throw StructuralError("export-off expects R or K, got '" + which + "'");
    // Faces: triangles when there are any, otherwise the top simplices.
    auto dim = k.base().dimension();
    auto faces = k.base().simplices(std::min<std::size_t>(dim, 2));
    std::ostringstream out;
    if (k.ambient() == 3)
        out << "OFF\n";
    else
        out << "nOFF\n" << k.ambient() << "\n";
    out << k.base().vertices().size() << " " << faces.size() << " 0\n";
    for (const auto& x : k.coords()) {
        for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << to_decimal(x[i], precision);
        out << "\n";
    }
    const auto& verts = k.base().vertices();
    for (const auto& s : faces) {
        out << s.size();
        for (auto v : s) out << " " << (std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        out << "\n";
    }
    if (o.json)
        emit_text(o, Json{{"format", k.ambient() == 3 ? "OFF" : "nOFF"}, {"text", out.str()}}.dump(2) + "\n");
    else
        emit_text(o, out.str());
}

int run(int argc, char** argv) {
    CLI::App app{"Exact PL kernel: complexes, prisms, families, nerves"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "JSON reports");

    auto out_opt = [&](CLI::App* s) { s->add_option("-o,--output", o.output, "output path"); };
    std::string path, path2, point;
    std::size_t p = 0, q = 0, j = 0, r = 1, max_degree = 3;
    bool counts = false, labels = false, timings = false, no_determinism = false;
    std::string eta, set_name, which;
    int precision = 12;
    std::vector<int> only;

    auto* validate_cmd = app.add_subcommand("validate", "check a Euclidean complex");
    validate_cmd->add_option("complex", path)->required();

    auto* subdivide_cmd = app.add_subcommand("subdivide", "barycentric subdivision");
    subdivide_cmd->add_option("complex", path)->required();
    subdivide_cmd->add_option("-r,--rounds", r, "number of subdivisions");
    out_opt(subdivide_cmd);

    auto* prism_r = app.add_subcommand("prism-r", "triangulated prism R(p)");
    auto* prism_k = app.add_subcommand("prism-k", "prism K^p");
    for (auto* s : {prism_r, prism_k}) {
        s->add_option("p", p)->required();
        s->add_flag("--counts", counts, "f-vector and Euler characteristic");
        s->add_flag("--labels", labels, "vertex labels");
        out_opt(s);
    }

    auto* rmap_cmd = app.add_subcommand("rmap", "R of a monotone map [p] -> [q]");
    rmap_cmd->add_option("eta", eta, "images, e.g. 0,0,1")->required();
    rmap_cmd->add_option("q", q)->required();

    auto* pullback_cmd = app.add_subcommand("pullback", "pull a family back along a map");
    pullback_cmd->add_option("map", path)->required();
    pullback_cmd->add_option("family", path2)->required();
    out_opt(pullback_cmd);

    auto* slice_cmd = app.add_subcommand("slice", "fiber of a family over a point");
    slice_cmd->add_option("family", path)->required();
    slice_cmd->add_option("point", point, "e.g. 1/2,1/3")->required();
    out_opt(slice_cmd);

    auto* fiber_cmd = app.add_subcommand("fiber", "regular fiber with probe certificate");
    fiber_cmd->add_option("map", path)->required();
    fiber_cmd->add_option("lambda", point, "interior point of the target simplex")->required();
    out_opt(fiber_cmd);

    auto* horn_cmd = app.add_subcommand("hornfill", "fill a family over a horn");
    horn_cmd->add_option("family", path)->required();
    horn_cmd->add_option("p", p)->required();
    horn_cmd->add_option("j", j)->required();
    out_opt(horn_cmd);

    auto* homology_cmd = app.add_subcommand("homology", "integral homology of a Δ-set or complex");
    homology_cmd->add_option("file", path)->required();
    homology_cmd->add_option("--set", set_name, "Δ-set name in a bundle");

    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a finite category");
    nerve_cmd->add_option("category", path)->required();
    nerve_cmd->add_option("--max-degree", max_degree, "longest strings");

    auto* suite_cmd = app.add_subcommand("verify-suite", "run the acceptance criteria");
    suite_cmd->add_option("--only", only, "criterion ids")->delimiter(',');
    suite_cmd->add_flag("--timings", timings, "append timings to stderr");
    suite_cmd->add_flag("--no-determinism", no_determinism, "skip the second run");

    auto* off_cmd = app.add_subcommand("export-off", "OFF mesh of R(p) or K^p");
    off_cmd->add_option("which", which, "R or K")->required();
    off_cmd->add_option("p", p)->required();
    off_cmd->add_option("--precision", precision, "decimal digits");
    out_opt(off_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*validate_cmd) {
            cmd_validate(o, path);
        } else if (*subdivide_cmd) {
            cmd_subdivide(o, path, r);
        } else if (*prism_r) {
            emit_prism(o, build_R(p), "R" + std::to_string(p), counts, labels);
        } else if (*prism_k) {
            emit_prism(o, build_K(p), "K" + std::to_string(p), counts, labels);
        } else if (*rmap_cmd) {
            cmd_rmap(o, eta, q);
        } else if (*pullback_cmd) {
            auto w = pullback(load_map(path), load_family(path2));
            emit(o, family_json(w), family_text("pullback", w));
        } else if (*slice_cmd) {
            auto k = slice(load_family(path), parse_point(point));
            emit(o, Json{{"point", strings(parse_point(point))}, {"fiber", complex_json(k)}},
                 complex_text("slice", k));
        } else if (*fiber_cmd) {
            auto lambda = parse_point(point);
            auto f = regular_fiber(load_map(path), lambda);
            Json pj = Json::array();
            for (const auto& x : f.probes) pj.push_back(strings(x));
            Json jr{{"lambda", strings(lambda)}, {"certified", f.certified}, {"message", f.message},
                    {"probes", pj}, {"fiber", complex_json(f.fiber)}};
            auto text = complex_text("fiber", f.fiber) + "# " + f.message + "\n";
            if (!f.certified) reject(o, jr, text);
            emit(o, jr, text);
        } else if (*horn_cmd) {
            auto w = horn_fill_family(load_family(path), p, j);
            emit(o, family_json(w), family_text("filled", w));
        } else if (*homology_cmd) {
            cmd_homology(o, path, set_name);
        } else if (*nerve_cmd) {
            cmd_nerve(o, path, max_degree);
        } else if (*suite_cmd) {
            auto results = run_suite({.determinism = !no_determinism, .only = only});
            emit_text(o, o.json ? render_json(results) : render_text(results));
            if (timings)
                for (const auto& res : results)
                    std::cerr << res.id << " " << res.elapsed.count() << " s\n";
            return all_pass(results) ? 0 : 2;
        } else if (*off_cmd) {
            cmd_export_off(o, which, p, precision);
        }
        return 0;
    } catch (const Rejected& rej) {
        if (o.json)
            std::cout << rej.report.dump(2) << "\n";
        else
            std::cout << rej.text;
        return 2;
    } catch (const ValidityError& e) {
        std::cerr << "error (ValidityError): " << e.what() << "\n";
        if (o.json) std::cout << Json{{"status", "invalid"}, {"error", "ValidityError"}, {"message", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const Error& e) {
        std::string kind = dynamic_cast<const StructuralError*>(&e)  ? "StructuralError"
                           : dynamic_cast<const GeometryError*>(&e) ? "GeometryError"
                                                                    : "Error";
        std::cerr << "error (" << kind << "): " << e.what() << "\n";
        if (o.json) std::cout << Json{{"status", "error"}, {"error", kind}, {"message", e.what()}}.dump(2) << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
