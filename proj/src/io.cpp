#include "plk/io.hpp"

#include "plk/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace plk {

LineReader::LineReader(std::istream& in) : in_(in) {}

const std::vector<std::string>* LineReader::peek() {
    while (!buffered_) {
        std::string line;
        if (!std::getline(in_, line)) return nullptr;
        ++line_no_;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<std::string> toks;
        for (std::string t; ss >> t;) toks.push_back(t);
        if (!toks.empty()) buffered_ = std::move(toks);
    }
    return &*buffered_;
}

std::vector<std::string> LineReader::next() {
    if (!peek()) fail("unexpected end of input");
    auto t = std::move(*buffered_);
    buffered_.reset();
    return t;
}

void LineReader::fail(const std::string& msg) const {
    throw StructuralError("line " + std::to_string(line_no_) + ": " + msg);
}

std::size_t parse_index(const std::string& tok, const LineReader& r) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        r.fail("expected a nonnegative integer, got '" + tok + "'");
    return v;
}

VertexId parse_vertex_id(const std::string& tok, const LineReader& r) {
    VertexId v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        r.fail("expected an integer vertex id, got '" + tok + "'");
    return v;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open '" + path + "'");
    return in;
}

NamedComplex read_complex(LineReader& r) {
    auto head = r.next();
    if (head.size() != 3 || head[0] != "complex" || head[2].rfind("ambient=", 0) != 0)
        r.fail("expected 'complex <name> ambient=<N>'");
    std::size_t ambient = parse_index(head[2].substr(8), r);
    std::vector<std::pair<VertexId, Point>> verts;
    std::vector<Simplex> simplices;
    while (const auto* t = r.peek()) {
        if ((*t)[0] == "v") {
            auto toks = r.next();
            if (toks.size() != ambient + 2) r.fail("vertex line needs an id and " +
                                                   std::to_string(ambient) + " coordinates");
            Point p;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                try {
                    p.push_back(parse_rational(toks[i]));
                } catch (const StructuralError& e) {
                    r.fail(e.what());
                }
            }
            verts.emplace_back(parse_vertex_id(toks[1], r), std::move(p));
        } else if ((*t)[0] == "s") {
            auto toks = r.next();
            if (toks.size() < 2) r.fail("empty simplex line");
            Simplex s;
            for (std::size_t i = 1; i < toks.size(); ++i) s.push_back(parse_vertex_id(toks[i], r));
            simplices.push_back(std::move(s));
        } else {
            break;
        }
    }
    std::sort(verts.begin(), verts.end());
    std::vector<VertexId> ids;
    std::vector<Point> coords;
    for (auto& [id, p] : verts) {
        ids.push_back(id);
        coords.push_back(std::move(p));
    }
    auto base = OrderedComplex::from_maximal(std::move(ids), std::move(simplices));
    return {head[1], EuclideanComplex(std::move(base), ambient, std::move(coords))};
}

NamedComplex read_complex(std::istream& in) {
    LineReader r(in);
    auto c = read_complex(r);
    if (!r.done()) r.fail("unexpected content after complex");
    return c;
}

NamedComplex load_complex(const std::string& path) {
    auto in = open_input(path);
    return read_complex(in);
}

void write_complex(std::ostream& out, const std::string& name, const EuclideanComplex& k) {
    out << "complex " << name << " ambient=" << k.ambient() << "\n";
    for (std::size_t i = 0; i < k.base().vertices().size(); ++i) {
        out << "v " << k.base().vertices()[i];
        for (const auto& q : k.coords()[i]) out << " " << to_string(q);
        out << "\n";
    }
    for (const auto& s : k.base().maximal_simplices()) {
        out << "s";
        for (auto v : s) out << " " << v;
        out << "\n";
    }
}

const DeltaSet& DeltaBundle::set(const std::string& name) const {
    for (const auto& [n, x] : sets)
        if (n == name) return x;
    throw StructuralError("no Δ-set named '" + name + "'");
}

namespace {

struct RawDelta {
    std::string name;
    // degree -> id -> faces (by id)
    std::vector<std::map<std::size_t, std::map<std::size_t, std::size_t>>> faces;
};

using IdIndex = std::vector<std::map<std::size_t, std::size_t>>;

DeltaSet finish(const RawDelta& raw, const LineReader& r, IdIndex& index) {
    FaceTable t(raw.faces.size());
    index.assign(raw.faces.size(), {});
    for (std::size_t k = 0; k < raw.faces.size(); ++k) {
        std::size_t i = 0;
        for (const auto& [id, f] : raw.faces[k]) index[k][id] = i++;
    }
    for (std::size_t k = 0; k < raw.faces.size(); ++k)
        for (const auto& [id, f] : raw.faces[k]) {
            FaceList fl;
            if (k > 0) {
                if (f.size() != k + 1 || f.rbegin()->first != k)
                    r.fail("generator " + std::to_string(id) + " of degree " + std::to_string(k) +
                           " needs faces d_0..d_" + std::to_string(k));
                for (const auto& [i, target] : f) {
                    auto it = index[k - 1].find(target);
                    if (it == index[k - 1].end())
                        r.fail("face target " + std::to_string(target) + " is not a generator");
                    fl.push_back(it->second);
                }
            }
            t[k].push_back(std::move(fl));
        }
    return DeltaSet(DeltaSet::Unchecked{}, std::move(t), raw.name);
}

}  // namespace

DeltaBundle read_delta_bundle(std::istream& in) {
    LineReader r(in);
    DeltaBundle b;
    std::optional<RawDelta> cur;
    std::map<std::string, IdIndex> ids;
    auto flush = [&] {
        if (cur) {
            if (ids.count(cur->name)) r.fail("duplicate dset name '" + cur->name + "'");
            b.sets.emplace_back(cur->name, finish(*cur, r, ids[cur->name]));
        }
        cur.reset();
    };
    while (!r.done()) {
        auto t = r.next();
        if (t[0] == "dset") {
            if (t.size() != 2) r.fail("expected 'dset <name>'");
            flush();
            cur = RawDelta{t[1], {}};
        } else if (t[0] == "g") {
            if (!cur || t.size() != 3) r.fail("expected 'g <degree> <id>' inside a dset");
            auto k = parse_index(t[1], r);
            if (cur->faces.size() <= k) cur->faces.resize(k + 1);
            if (!cur->faces[k].emplace(parse_index(t[2], r), std::map<std::size_t, std::size_t>{})
                     .second)
                r.fail("duplicate generator");
        } else if (t[0] == "d") {
            if (!cur || t.size() != 5) r.fail("expected 'd <degree> <id> <i> <target>'");
            auto k = parse_index(t[1], r);
            auto id = parse_index(t[2], r);
            auto i = parse_index(t[3], r);
            if (k >= cur->faces.size() || !cur->faces[k].count(id))
                r.fail("face for undeclared generator");
            if (k == 0 || i > k) r.fail("face index out of range");
            if (!cur->faces[k][id].emplace(i, parse_index(t[4], r)).second)
                r.fail("duplicate face");
        } else if (t[0] == "map") {
            if (t.size() != 4) r.fail("expected 'map <name> <src> <dst>'");
            flush();
            DeltaBundle::Map m{t[1], t[2], t[3], {}};
            std::vector<std::map<std::size_t, std::size_t>> raw;
            while (const auto* nt = r.peek()) {
                if ((*nt)[0] != "m") break;
                auto mt = r.next();
                if (mt.size() != 4) r.fail("expected 'm <degree> <id> <target>'");
                auto k = parse_index(mt[1], r);
                if (raw.size() <= k) raw.resize(k + 1);
                raw[k][parse_index(mt[2], r)] = parse_index(mt[3], r);
            }
            const auto& src = b.set(m.src);
            b.set(m.dst);
            const auto& src_ids = ids[m.src];
            const auto& dst_ids = ids[m.dst];
            std::vector<std::vector<std::size_t>> maps(raw.size());
            for (std::size_t k = 0; k < raw.size(); ++k) {
                if (raw[k].size() != src.count(k)) r.fail("map must list every generator");
                for (const auto& [id, target] : raw[k]) {
                    if (k >= src_ids.size() || !src_ids[k].count(id) || k >= dst_ids.size() ||
                        !dst_ids[k].count(target))
                        r.fail("map entry names an unknown generator");
                    maps[k].push_back(dst_ids[k].at(target));
                }
            }
            m.morphism = DeltaMorphism(std::move(maps), m.name);
            b.maps.push_back(std::move(m));
        } else {
            r.fail("unknown directive '" + t[0] + "'");
        }
    }
    flush();
    if (b.sets.empty()) throw StructuralError("no dset in input");
    return b;
}

DeltaBundle load_delta_bundle(const std::string& path) {
    auto in = open_input(path);
    return read_delta_bundle(in);
}

void write_delta_set(std::ostream& out, const DeltaSet& x) {
    out << "dset " << x.name() << "\n";
    for (std::size_t k = 0; k < x.table().size(); ++k)
        for (std::size_t g = 0; g < x.count(k); ++g) out << "g " << k << " " << g << "\n";
    for (std::size_t k = 1; k < x.table().size(); ++k)
        for (std::size_t g = 0; g < x.count(k); ++g)
            for (std::size_t i = 0; i <= k; ++i)
                out << "d " << k << " " << g << " " << i << " " << x.face(k, g, i) << "\n";
}

void write_delta_morphism(std::ostream& out, const std::string& name, const std::string& src,
                          const std::string& dst, const DeltaMorphism& f) {
    out << "map " << name << " " << src << " " << dst << "\n";
    for (std::size_t k = 0; k < f.maps().size(); ++k)
        for (std::size_t g = 0; g < f.maps()[k].size(); ++g)
            out << "m " << k << " " << g << " " << f(k, g) << "\n";
}

}  // namespace plk
