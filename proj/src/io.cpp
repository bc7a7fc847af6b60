#include "z2z4/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace z2z4 {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

MixedMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("missing header line");
    std::size_t alpha = 0, beta = 0;
    if (std::sscanf(line.c_str(), "alpha=%zu beta=%zu", &alpha, &beta) != 2)
        throw std::invalid_argument("bad header, expected `alpha=<a> beta=<b>`");

    MixedMatrix m(Shape{alpha, beta});
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::vector<std::uint8_t> bin, quat;
        bool seen_sep = false;
        for (char ch : line) {
            if (ch == '|') {
                if (seen_sep) throw std::invalid_argument("duplicate separator");
                seen_sep = true;
                continue;
            }
            if (ch < '0' || ch > '3') throw std::invalid_argument("bad digit in row");
            std::uint8_t d = static_cast<std::uint8_t>(ch - '0');
            const bool to_bin = seen_sep ? false : bin.size() < alpha;
            if (to_bin) {
                if (d > 1) throw std::invalid_argument("binary digit out of {0,1}");
                bin.push_back(d);
            } else {
                quat.push_back(d);
            }
        }
        if (alpha > 0 && beta > 0 && !seen_sep)
            throw std::invalid_argument("missing `|` separator");
        if (bin.size() != alpha || quat.size() != beta)
            throw std::invalid_argument("ragged row");
        m.append_row(MixedVector(std::move(bin), std::move(quat)));
    }
    return m;
}

std::string emit_matrix(const MixedMatrix& m) {
    std::ostringstream out;
    out << "alpha=" << m.shape().alpha << " beta=" << m.shape().beta << "\n";
    for (const auto& r : m.rows()) {
        for (auto b : r.bin()) out << char('0' + b);
        if (m.shape().alpha > 0 && m.shape().beta > 0) out << '|';
        for (auto q : r.quat()) out << char('0' + q);
        out << "\n";
    }
    return out.str();
}

Monomial parse_permutation(const std::string& raw, Shape shape) {
    const std::string text = trim(raw);
    std::vector<std::uint32_t> perm(shape.width());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);
    std::vector<std::uint8_t> signs(shape.beta, 0);
    std::vector<bool> moved(shape.width(), false);

    if (text.empty() || text == "Id") return Monomial(shape);

    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '(') {
            std::size_t close = text.find(')', pos);
            if (close == std::string::npos) throw std::invalid_argument("unterminated cycle");
            std::vector<std::size_t> cyc;
            std::istringstream body(text.substr(pos + 1, close - pos - 1));
            std::string tok;
            while (std::getline(body, tok, ',')) {
                tok = trim(tok);
                if (tok.empty()) throw std::invalid_argument("empty cycle element");
                std::size_t c = std::stoul(tok);
                if (c < 1 || c > shape.width())
                    throw std::invalid_argument("cycle coordinate out of range");
                if (moved[c - 1]) throw std::invalid_argument("overlapping cycles");
                moved[c - 1] = true;
                cyc.push_back(c - 1);
            }
            for (std::size_t i = 0; i < cyc.size(); ++i)
                perm[cyc[i]] = static_cast<std::uint32_t>(cyc[(i + 1) % cyc.size()]);
            pos = close + 1;
        } else if (text[pos] == '!') {
            std::size_t end = pos + 1;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
                ++end;
            if (end == pos + 1) throw std::invalid_argument("bad sign-flip token");
            std::size_t c = std::stoul(text.substr(pos + 1, end - pos - 1));
            if (c <= shape.alpha || c > shape.width())
                throw std::invalid_argument("sign flip must target a quaternary coordinate");
            signs[c - 1 - shape.alpha] ^= 1;
            pos = end;
        } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        } else {
            throw std::invalid_argument("unexpected character in permutation");
        }
    }
    return Monomial(shape, std::move(perm), std::move(signs));
}

std::string emit_permutation(const Monomial& m) {
    std::ostringstream out;
    const auto& p = m.perm();
    std::vector<bool> done(p.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == i) continue;
        out << '(';
        std::size_t c = i;
        bool first = true;
        do {
            if (!first) out << ',';
            out << (c + 1);
            done[c] = true;
            c = p[c];
            first = false;
        } while (c != i);
        out << ')';
        any = true;
    }
    for (std::size_t k = 0; k < m.signs().size(); ++k)
        if (m.signs()[k]) {
            out << '!' << (m.shape().alpha + k + 1);
            any = true;
        }
    return any ? out.str() : "Id";
}

std::string format_type(const CodeType& t) {
    std::ostringstream out;
    out << '(' << t.alpha << ',' << t.beta << ';' << t.gamma << ',' << t.delta << ';'
        << t.kappa << ')';
    return out.str();
}

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line lacks '='");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

}  // namespace z2z4
