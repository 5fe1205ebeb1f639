#pragma once

#include "plk/complex.hpp"
#include "plk/delta_set.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace plk {

// Whitespace-tokenized lines with '#' comments and blank lines dropped.
class LineReader {
public:
    explicit LineReader(std::istream& in);
    // Next line's tokens, without consuming it.
    const std::vector<std::string>* peek();
    std::vector<std::string> next();
    bool done() { return peek() == nullptr; }
    std::size_t line_number() const { return line_no_; }
    [[noreturn]] void fail(const std::string& msg) const;

private:
    std::istream& in_;
    std::optional<std::vector<std::string>> buffered_;
    std::size_t line_no_ = 0;
};

std::size_t parse_index(const std::string& tok, const LineReader& r);
VertexId parse_vertex_id(const std::string& tok, const LineReader& r);

struct NamedComplex {
    std::string name;
    EuclideanComplex complex;
};

// Reads one `complex` block. Stops before a line whose first token is not v/s.
NamedComplex read_complex(LineReader& r);
NamedComplex read_complex(std::istream& in);
NamedComplex load_complex(const std::string& path);
void write_complex(std::ostream& out, const std::string& name, const EuclideanComplex& k);

struct DeltaBundle {
    std::vector<std::pair<std::string, DeltaSet>> sets;
    struct Map {
        std::string name, src, dst;
        DeltaMorphism morphism;
    };
    std::vector<Map> maps;
    const DeltaSet& set(const std::string& name) const;
};

// Δ-sets are loaded unchecked; callers run check_identities.
DeltaBundle read_delta_bundle(std::istream& in);
DeltaBundle load_delta_bundle(const std::string& path);
void write_delta_set(std::ostream& out, const DeltaSet& x);
void write_delta_morphism(std::ostream& out, const std::string& name, const std::string& src,
                          const std::string& dst, const DeltaMorphism& f);

std::ifstream open_input(const std::string& path);

}  // namespace plk
