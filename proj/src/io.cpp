#include "bcp/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "bcp/errors.hpp"

namespace bcp {
namespace {

std::int64_t parse_int(std::string_view text, const std::string& what) {
    std::int64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) throw InvalidInput("invalid " + what + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t at = 0;
    while (at < line.size()) {
        while (at < line.size() && (line[at] == ' ' || line[at] == '\t' || line[at] == '\r')) ++at;
        const std::size_t start = at;
        while (at < line.size() && line[at] != ' ' && line[at] != '\t' && line[at] != '\r') ++at;
        if (at > start) out.push_back(line.substr(start, at - start));
    }
    return out;
}

template <class F>
void for_each_line(std::string_view text, F&& visit) {
    std::size_t number = 0;
    std::size_t at = 0;
    while (at <= text.size()) {
        const std::size_t end = std::min(text.find('\n', at), text.size());
        ++number;
        visit(number, text.substr(at, end - at));
        at = end + 1;
    }
}

[[noreturn]] void fail_at(std::size_t line, const std::string& message) {
    throw InvalidInput("line " + std::to_string(line) + ": " + message);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_int(text.substr(0, slash), "rational numerator");
        const auto den = parse_int(text.substr(slash + 1), "rational denominator");
        if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
            throw InvalidInput("invalid decimal '" + std::string(text) + "'");
        }
        const bool negative = !whole.empty() && whole.front() == '-';
        const auto int_part = whole.empty() || whole == "-" ? 0 : parse_int(whole, "decimal");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const Rational fraction(parse_int(frac, "decimal"), scale);
        return negative ? Rational(int_part) - fraction : Rational(int_part) + fraction;
    }
    return Rational(parse_int(text, "number"));
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_decimal(const Rational& r, int digits) {
    __int128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool negative = r < 0;
    const __int128 num = negative ? -static_cast<__int128>(r.numerator()) : r.numerator();
    const __int128 den = r.denominator();
    const __int128 scaled = (num * scale * 2 + den) / (den * 2);
    const auto whole = static_cast<std::int64_t>(scaled / scale);
    std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
    if (digits > 0) {
        std::string frac = std::to_string(static_cast<std::int64_t>(scaled % scale));
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

WeightedGraph parse_instance(std::string_view text) {
    std::optional<std::size_t> n;
    std::size_t declared_edges = 0;
    std::vector<std::optional<Rational>> weights;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    auto vertex_id = [&](std::size_t line, std::string_view tok) {
        std::int64_t id = 0;
        try {
            id = parse_int(tok, "vertex id");
        } catch (const InvalidInput& e) {
            fail_at(line, e.what());
        }
        if (id < 0 || static_cast<std::size_t>(id) >= *n) {
            fail_at(line, "vertex " + std::string(tok) + " out of range [0, " + std::to_string(*n) + ")");
        }
        return static_cast<Vertex>(id);
    };

    for_each_line(text, [&](std::size_t line, std::string_view raw) {
        const auto tok = tokens(raw);
        if (tok.empty() || tok[0] == "c") return;
        if (tok[0] == "p") {
            if (n) fail_at(line, "duplicate problem line");
            if (tok.size() != 4 || tok[1] != "bcp") fail_at(line, "expected 'p bcp <n> <m>'");
            std::int64_t nv = 0;
            std::int64_t ne = 0;
            try {
                nv = parse_int(tok[2], "vertex count");
                ne = parse_int(tok[3], "edge count");
            } catch (const InvalidInput& e) {
                fail_at(line, e.what());
            }
            if (nv < 1 || ne < 0) fail_at(line, "counts must satisfy n >= 1 and m >= 0");
            n = static_cast<std::size_t>(nv);
            declared_edges = static_cast<std::size_t>(ne);
            weights.assign(*n, std::nullopt);
            return;
        }
        if (!n) fail_at(line, "problem line 'p bcp <n> <m>' must come first");
        if (tok[0] == "v") {
            if (tok.size() != 3) fail_at(line, "expected 'v <id> <weight>'");
            const Vertex v = vertex_id(line, tok[1]);
            if (weights[static_cast<std::size_t>(v)]) fail_at(line, "duplicate weight for vertex " + std::string(tok[1]));
            Rational w;
            try {
                w = parse_rational(tok[2]);
            } catch (const InvalidInput& e) {
                fail_at(line, e.what());
            }
            if (w <= 0) fail_at(line, "nonpositive weight " + std::string(tok[2]) + " for vertex " + std::string(tok[1]));
            weights[static_cast<std::size_t>(v)] = w;
        } else if (tok[0] == "e") {
            if (tok.size() != 3) fail_at(line, "expected 'e <u> <v>'");
            const Vertex a = vertex_id(line, tok[1]);
            const Vertex b = vertex_id(line, tok[2]);
            if (a == b) fail_at(line, "loop at vertex " + std::to_string(a));
            const auto key = std::minmax(a, b);
            if (!seen.insert(key).second) {
                fail_at(line, "duplicate edge " + std::to_string(key.first) + "-" + std::to_string(key.second));
            }
            edges.emplace_back(a, b);
        } else {
            fail_at(line, "unknown line type '" + std::string(tok[0]) + "'");
        }
    });

    if (!n) throw InvalidInput("missing problem line 'p bcp <n> <m>'");
    if (edges.size() != declared_edges) {
        throw InvalidInput("problem line declares " + std::to_string(declared_edges) + " edges but " +
                           std::to_string(edges.size()) + " were given");
    }
    std::int64_t lcm = 1;
    for (const auto& w : weights) {
        if (!w) continue;
        const __int128 next = static_cast<__int128>(lcm / std::gcd(lcm, w->denominator())) * w->denominator();
        if (next > std::numeric_limits<std::int64_t>::max()) throw InvalidInput("weight denominators overflow 64 bits");
        lcm = static_cast<std::int64_t>(next);
    }
    std::vector<Weight> cleared(*n);
    for (std::size_t v = 0; v < *n; ++v) {
        const Rational w = weights[v].value_or(Rational(1));
        const __int128 value = static_cast<__int128>(w.numerator()) * (lcm / w.denominator());
        if (value > std::numeric_limits<Weight>::max()) throw InvalidInput("weight of vertex " + std::to_string(v) + " overflows 64 bits");
        cleared[v] = static_cast<Weight>(value);
    }
    return WeightedGraph(std::move(cleared), edges);
}

std::string write_instance(const WeightedGraph& g) {
    std::ostringstream out;
    out << "p bcp " << g.order() << ' ' << g.edge_count() << '\n';
    for (std::size_t v = 0; v < g.order(); ++v) out << "v " << v << ' ' << g.weights()[v] << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

WeightedGraph read_instance_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_instance(text);
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

std::vector<std::vector<Vertex>> parse_partition(std::string_view text) {
    std::vector<std::vector<Vertex>> classes;
    for_each_line(text, [&](std::size_t line, std::string_view raw) {
        const auto tok = tokens(raw);
        if (tok.empty() || tok[0].front() == 'c' || tok[0].front() == '#') return;
        std::vector<Vertex> members;
        for (auto t : tok) {
            std::int64_t id = 0;
            try {
                id = parse_int(t, "vertex id");
            } catch (const InvalidInput& e) {
                fail_at(line, e.what());
            }
            if (id < 0 || id > std::numeric_limits<Vertex>::max()) fail_at(line, "vertex id out of range");
            members.push_back(static_cast<Vertex>(id));
        }
        classes.push_back(std::move(members));
    });
    return classes;
}

std::string write_partition(const Partition& p) {
    std::string out;
    for (const auto& c : p.classes) {
        bool first = true;
        c.for_each([&](Vertex v) {
            out += (first ? "" : " ") + std::to_string(v);
            first = false;
        });
        out += '\n';
    }
    return out;
}

}  // namespace bcp
