#include "defco/graph6.hpp"

#include "defco/errors.hpp"

namespace defco {

namespace {

constexpr int kBias = 63;
constexpr long kShortMax = 62;
constexpr long kLongMax = 258047;  // 2^18 - 1

int decode_byte(char c, std::size_t at) {
    if (c < 63 || c > 126)
        throw ContractError("graph6: byte " + std::to_string(at) + " out of range");
    return c - kBias;
}

}  // namespace

SimpleGraph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) throw ContractError("graph6: empty input");

    std::size_t pos = 0;
    long n;
    if (s[0] != '~') {
        n = decode_byte(s[0], 0);
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw ContractError("graph6: 8-byte order header (n > 258047) unsupported");
        if (s.size() < 4) throw ContractError("graph6: truncated order header");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | decode_byte(s[pos], pos);
        if (n <= kShortMax) throw ContractError("graph6: long header for small order");
    }

    long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < need) throw ContractError("graph6: truncated edge bits");
    if (s.size() - pos > need) throw ContractError("graph6: trailing data");

    SimpleGraph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = decode_byte(s[pos + bit / 6], pos + bit / 6);
            if (byte & (1 << (5 - bit % 6))) g.add_edge(i, j);
        }
    return g;
}

std::string write_graph6(const SimpleGraph& g) {
    long n = g.vertex_count();
    if (n > kLongMax) throw ContractError("graph6: more than 258047 vertices");
    std::string out;
    if (n <= kShortMax) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    long bits = n * (n - 1) / 2;
    std::string body(static_cast<std::size_t>((bits + 5) / 6), 0);
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (char& c : body) c = static_cast<char>(c + kBias);
    return out + body;
}

}  // namespace defco
