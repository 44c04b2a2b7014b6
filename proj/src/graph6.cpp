#include "edc/graph6.hpp"

#include <sstream>

namespace edc {

namespace {

void append_sextets(std::string& out, unsigned long long value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_sextets(out, static_cast<unsigned long long>(n), 3);
    } else {
        throw std::invalid_argument("graph too large for graph6");
    }
    int bit = 0;
    unsigned cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.has_edge(u, v) ? 1u : 0u);
            if (++bit == 6) {
                out.push_back(static_cast<char>(cur + 63));
                bit = 0;
                cur = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>((cur << (6 - bit)) + 63));
    return out;
}

Graph graph6_decode(std::string_view s) {
    size_t pos = 0;
    auto next = [&]() -> unsigned {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated payload");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: malformed byte");
        return c - 63u;
    };
    long long n;
    unsigned first = next();
    if (first <= 62) {
        n = first;
    } else {
        int sextets = 3;
        if (pos < s.size() && s[pos] == 126) {  // '~~' long form
            ++pos;
            sextets = 6;
        }
        unsigned long long v = 0;
        for (int i = 0; i < sextets; ++i) v = (v << 6) | next();
        n = static_cast<long long>(v);
        if (n > 100000) throw std::invalid_argument("graph6: size beyond supported cap");
    }
    Graph g(static_cast<int>(n));
    int bit = 0;
    unsigned cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                cur = next();
                bit = 6;
            }
            --bit;
            if ((cur >> bit) & 1u) g.add_edge(u, v);
        }
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace edc
