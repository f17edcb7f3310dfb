#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "spansurf/colouring.hpp"
#include "spansurf/surface.hpp"
#include "spansurf/three_graph.hpp"

namespace spansurf {

// Text formats. ".3g": first payload line "n m", then m lines "a b c"
// with 0-based sorted vertices; '#' starts a comment line. The graph
// format mirrors it with pairs, ".3gc" suffixes each edge line with one
// of R/G/U. A JSON envelope {"n":..., "edges":[[a,b,c],...]} is accepted
// interchangeably on input.

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

ThreeGraph read_three_graph(std::istream& in);
void write_three_graph(std::ostream& out, const ThreeGraph& h,
                       const std::vector<std::string>& comments = {});

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& comments = {});

// Facet lists share the ".3g" format.
Complex read_complex(std::istream& in);
void write_complex(std::ostream& out, const Complex& k,
                   const std::vector<std::string>& comments = {});

struct ColouredHost {
    ThreeGraph host;
    EdgeColouring colouring;
};

ColouredHost read_coloured(std::istream& in);
void write_coloured(std::ostream& out, const ThreeGraph& h, const EdgeColouring& c,
                    const std::vector<std::string>& comments = {});

}  // namespace spansurf
