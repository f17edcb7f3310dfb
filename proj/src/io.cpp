#include "spansurf/io.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace spansurf {

namespace {

// Reads "n m" then m rows of `width` integers, skipping comments. When
// the stream starts with '{' the JSON envelope is parsed instead. An
// optional single trailing letter per row lands in *tags.
struct Table {
    int n = 0;
    std::vector<std::vector<int>> rows;
    std::vector<char> tags;
};

Table read_table(std::istream& in, int width, bool allow_tag) {
    // peek past leading whitespace for a JSON envelope
    char first = 0;
    while (in.get(first) && (first == ' ' || first == '\n' || first == '\t' || first == '\r')) {
    }
    if (first == '{') {
        in.putback(first);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON envelope: ") + e.what(), 1);
        }
        Table t;
        if (!j.contains("n") || !j.contains("edges"))
            throw ParseError("JSON envelope needs \"n\" and \"edges\"", 1);
        t.n = j["n"].get<int>();
        for (const auto& row : j["edges"]) {
            if (static_cast<int>(row.size()) != width)
                throw ParseError("JSON edge row of wrong width", 1);
            t.rows.push_back(row.get<std::vector<int>>());
        }
        return t;
    }
    if (in) in.putback(first);

    Table t;
    std::string line;
    int lineno = 0;
    int m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (m < 0) {
            if (!(ls >> t.n >> m)) {
                std::string tok;
                std::istringstream probe(line);
                if (probe >> tok) throw ParseError("expected header \"n m\"", lineno);
                m = -1;  // blank line, keep looking
                continue;
            }
            if (t.n < 0 || m < 0) throw ParseError("negative counts in header", lineno);
            continue;
        }
        std::vector<int> row(width);
        if (!(ls >> row[0])) continue;  // blank
        for (int i = 1; i < width; ++i)
            if (!(ls >> row[i])) throw ParseError("truncated edge row", lineno);
        char tag = 0;
        std::string rest;
        if (ls >> rest) {
            if (allow_tag && rest.size() == 1)
                tag = rest[0];
            else
                throw ParseError("unexpected token \"" + rest + "\"", lineno);
        }
        t.rows.push_back(std::move(row));
        t.tags.push_back(tag);
        if (static_cast<int>(t.rows.size()) == m) break;
    }
    if (m < 0) throw ParseError("missing header \"n m\"", lineno == 0 ? 1 : lineno);
    if (static_cast<int>(t.rows.size()) != m)
        throw ParseError("expected " + std::to_string(m) + " edge rows, found " +
                             std::to_string(t.rows.size()),
                         lineno);
    return t;
}

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
}

}  // namespace

ThreeGraph read_three_graph(std::istream& in) {
    Table t = read_table(in, 3, false);
    std::vector<Triple> es;
    for (const auto& r : t.rows) es.push_back(make_triple(r[0], r[1], r[2]));
    try {
        return ThreeGraph(t.n, std::move(es));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1);
    }
}

void write_three_graph(std::ostream& out, const ThreeGraph& h,
                       const std::vector<std::string>& comments) {
    write_comments(out, comments);
    out << h.vertex_count() << " " << h.edge_count() << "\n";
    for (const auto& t : h.edges()) out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

Graph read_graph(std::istream& in) {
    Table t = read_table(in, 2, false);
    std::vector<Pair> es;
    for (const auto& r : t.rows) es.push_back({std::min(r[0], r[1]), std::max(r[0], r[1])});
    try {
        return Graph(t.n, std::move(es));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1);
    }
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    write_comments(out, comments);
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& e : g.edges()) out << e[0] << " " << e[1] << "\n";
}

Complex read_complex(std::istream& in) {
    Table t = read_table(in, 3, false);
    std::vector<Triple> fs;
    for (const auto& r : t.rows) fs.push_back(make_triple(r[0], r[1], r[2]));
    try {
        return Complex(std::move(fs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1);
    }
}

void write_complex(std::ostream& out, const Complex& k,
                   const std::vector<std::string>& comments) {
    write_comments(out, comments);
    int n = k.vertices().empty() ? 0 : k.vertices().back() + 1;
    out << n << " " << k.facet_count() << "\n";
    for (const auto& t : k.facets()) out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

ColouredHost read_coloured(std::istream& in) {
    Table t = read_table(in, 3, true);
    std::vector<Triple> es;
    for (const auto& r : t.rows) es.push_back(make_triple(r[0], r[1], r[2]));
    ThreeGraph h(t.n, es);
    EdgeColouring c;
    c.colour_of.assign(h.edge_count(), EdgeColour::Uncoloured);
    for (size_t i = 0; i < es.size(); ++i) {
        int id = h.edge_index(make_triple(es[i][0], es[i][1], es[i][2]));
        switch (t.tags[i]) {
            case 'R': c.colour_of[id] = EdgeColour::Red; break;
            case 'G': c.colour_of[id] = EdgeColour::Green; break;
            case 'U': case 0: c.colour_of[id] = EdgeColour::Uncoloured; break;
            default: throw ParseError("colour tag must be R, G or U", 1);
        }
    }
    return {std::move(h), std::move(c)};
}

void write_coloured(std::ostream& out, const ThreeGraph& h, const EdgeColouring& c,
                    const std::vector<std::string>& comments) {
    write_comments(out, comments);
    out << h.vertex_count() << " " << h.edge_count() << "\n";
    for (int i = 0; i < h.edge_count(); ++i) {
        const Triple& t = h.edge(i);
        char tag = c.colour_of[i] == EdgeColour::Red
                       ? 'R'
                       : (c.colour_of[i] == EdgeColour::Green ? 'G' : 'U');
        out << t[0] << " " << t[1] << " " << t[2] << " " << tag << "\n";
    }
}

}  // namespace spansurf
