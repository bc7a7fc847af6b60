#include "z2z4/construct.hpp"

#include <map>
#include <stdexcept>

namespace z2z4 {

namespace {

MixedVector quat_row(std::vector<std::uint8_t> q) {
    return MixedVector({}, std::move(q));
}

// Rows given as "<alpha binary digits>|<beta quaternary digits>"; the
// separator is omitted when one side is empty.
MixedMatrix literal(std::size_t alpha, std::size_t beta,
                    std::initializer_list<const char*> rows) {
    MixedMatrix m(Shape{alpha, beta});
    for (const char* text : rows) {
        std::vector<std::uint8_t> bin, quat;
        for (const char* p = text; *p; ++p) {
            if (*p == '|') continue;
            std::uint8_t d = static_cast<std::uint8_t>(*p - '0');
            if (bin.size() < alpha)
                bin.push_back(d);
            else
                quat.push_back(d);
        }
        m.append_row(MixedVector(std::move(bin), std::move(quat)));
    }
    return m;
}

}  // namespace

MixedMatrix hamming_parity(std::size_t t) {
    if (t < 2) throw std::invalid_argument("hamming_parity requires t >= 2");
    const std::size_t n = (std::size_t{1} << t) - 1;
    MixedMatrix m(Shape{n, 0});
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<std::uint8_t> bin(n);
        for (std::size_t col = 1; col <= n; ++col)
            bin[col - 1] = static_cast<std::uint8_t>((col >> (t - 1 - i)) & 1u);
        m.append_row(MixedVector(std::move(bin), {}));
    }
    return m;
}

MixedMatrix extended_hamming_parity(std::size_t t) {
    if (t < 2) throw std::invalid_argument("extended_hamming_parity requires t >= 2");
    const std::size_t n = std::size_t{1} << t;
    MixedMatrix m(Shape{n, 0});
    m.append_row(MixedVector(std::vector<std::uint8_t>(n, 1), {}));
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<std::uint8_t> bin(n);
        for (std::size_t col = 0; col < n; ++col)
            bin[col] = static_cast<std::uint8_t>((col >> (t - 1 - i)) & 1u);
        m.append_row(MixedVector(std::move(bin), {}));
    }
    return m;
}

MixedMatrix extended_perfect_z4_dual(std::size_t t, std::size_t delta) {
    if (t < 3) throw std::invalid_argument("extended_perfect_z4_dual requires t >= 3");
    if (delta < 1 || 2 * delta > t + 1)
        throw std::invalid_argument("delta out of range 1..floor((t+1)/2)");
    const std::size_t gamma = t + 1 - 2 * delta;
    const std::size_t beta = std::size_t{1} << (t - 1);
    std::vector<std::vector<std::uint8_t>> rows(gamma + delta,
                                                std::vector<std::uint8_t>(beta));
    for (std::size_t c = 0; c < beta; ++c) {
        // Column layout (2a | 1, q): gamma top bits a, then delta-1
        // base-4 digits q, column index lexicographic.
        for (std::size_t i = 0; i < gamma; ++i)
            rows[i][c] = static_cast<std::uint8_t>(
                2 * ((c >> (2 * (delta - 1) + gamma - 1 - i)) & 1u));
        rows[gamma][c] = 1;
        for (std::size_t j = 0; j + 1 < delta; ++j)
            rows[gamma + 1 + j][c] =
                static_cast<std::uint8_t>((c >> (2 * (delta - 2 - j))) & 3u);
    }
    MixedMatrix m(Shape{0, beta});
    for (auto& r : rows) m.append_row(quat_row(std::move(r)));
    return m;
}

MixedMatrix perfect_z2z4_dual(std::size_t t, std::size_t r) {
    if (r < 2 || r > t || t > 2 * r)
        throw std::invalid_argument("(t,r) must satisfy 2 <= r <= t <= 2r");
    const std::size_t gamma = 2 * r - t;
    const std::size_t delta = t - r;
    const std::size_t alpha = (std::size_t{1} << r) - 1;
    const std::size_t beta = (std::size_t{1} << (t - 1)) - (std::size_t{1} << (r - 1));

    std::vector<std::vector<std::uint8_t>> bins(r, std::vector<std::uint8_t>(alpha));
    std::vector<std::vector<std::uint8_t>> quats(r, std::vector<std::uint8_t>(beta));

    for (std::size_t col = 1; col <= alpha; ++col)
        for (std::size_t i = 0; i < r; ++i)
            bins[i][col - 1] = static_cast<std::uint8_t>((col >> (r - 1 - i)) & 1u);

    // Quaternary columns: lexicographic walk over {0,2}^gamma x Z4^delta
    // keeping one representative (first odd entry 1) per {v,3v} orbit.
    std::size_t col = 0;
    const std::size_t total = std::size_t{1} << (gamma + 2 * delta);
    for (std::size_t code = 0; code < total && col < beta; ++code) {
        std::vector<std::uint8_t> v(r);
        for (std::size_t i = 0; i < gamma; ++i)
            v[i] = static_cast<std::uint8_t>(
                2 * ((code >> (2 * delta + gamma - 1 - i)) & 1u));
        std::uint8_t first_odd = 0;
        for (std::size_t j = 0; j < delta; ++j) {
            v[gamma + j] = static_cast<std::uint8_t>((code >> (2 * (delta - 1 - j))) & 3u);
            if (!first_odd && (v[gamma + j] & 1u)) first_odd = v[gamma + j];
        }
        if (first_odd != 1) continue;
        for (std::size_t i = 0; i < r; ++i) quats[i][col] = v[i];
        ++col;
    }
    if (col != beta) throw std::logic_error("representative count mismatch");

    MixedMatrix m(Shape{alpha, beta});
    for (std::size_t i = 0; i < r; ++i)
        m.append_row(MixedVector(std::move(bins[i]), std::move(quats[i])));
    return m;
}

MixedMatrix extended_perfect_z2z4_dual(std::size_t t, std::size_t r) {
    return extend_parity(perfect_z2z4_dual(t, r));
}

MixedMatrix double_quaternary(const MixedMatrix& h) {
    if (h.shape().alpha != 0)
        throw std::invalid_argument("double_quaternary needs alpha = 0");
    const std::size_t beta = h.shape().beta;
    MixedMatrix out(Shape{0, 2 * beta});
    std::vector<std::uint8_t> top(2 * beta, 0);
    for (std::size_t j = beta; j < 2 * beta; ++j) top[j] = 2;
    out.append_row(quat_row(std::move(top)));
    for (const auto& r : h.rows()) {
        std::vector<std::uint8_t> q(r.quat());
        q.insert(q.end(), r.quat().begin(), r.quat().end());
        out.append_row(quat_row(std::move(q)));
    }
    return out;
}

MixedMatrix quadruple_quaternary(const MixedMatrix& h) {
    if (h.shape().alpha != 0)
        throw std::invalid_argument("quadruple_quaternary needs alpha = 0");
    const std::size_t beta = h.shape().beta;
    MixedMatrix out(Shape{0, 4 * beta});
    for (const auto& r : h.rows()) {
        std::vector<std::uint8_t> q;
        q.reserve(4 * beta);
        for (int rep = 0; rep < 4; ++rep)
            q.insert(q.end(), r.quat().begin(), r.quat().end());
        out.append_row(quat_row(std::move(q)));
    }
    std::vector<std::uint8_t> ramp(4 * beta);
    for (std::size_t j = 0; j < 4 * beta; ++j)
        ramp[j] = static_cast<std::uint8_t>(j / beta);
    out.append_row(quat_row(std::move(ramp)));
    return out;
}

MixedMatrix double_additive(const MixedMatrix& h) {
    const std::size_t a = h.shape().alpha;
    const std::size_t b = h.shape().beta;
    if (a == 0) throw std::invalid_argument("double_additive needs alpha != 0");
    MixedMatrix out(Shape{2 * a, 2 * b});
    std::vector<std::uint8_t> tb(2 * a, 0), tq(2 * b, 0);
    for (std::size_t i = a; i < 2 * a; ++i) tb[i] = 1;
    for (std::size_t j = b; j < 2 * b; ++j) tq[j] = 2;
    out.append_row(MixedVector(std::move(tb), std::move(tq)));
    for (const auto& r : h.rows()) {
        std::vector<std::uint8_t> bin(r.bin());
        bin.insert(bin.end(), r.bin().begin(), r.bin().end());
        std::vector<std::uint8_t> quat(r.quat());
        quat.insert(quat.end(), r.quat().begin(), r.quat().end());
        out.append_row(MixedVector(std::move(bin), std::move(quat)));
    }
    return out;
}

MixedMatrix quadruple_additive(const MixedMatrix& h) {
    const std::size_t a = h.shape().alpha;
    const std::size_t b = h.shape().beta;
    if (a == 0) throw std::invalid_argument("quadruple_additive needs alpha != 0");
    if (h.row_count() == 0 || h.row(0) != all_one_two(h.shape()))
        throw std::invalid_argument("quadruple_additive needs the all-(1|2) first row");
    if (compute_type(h).gamma != 1)
        throw std::invalid_argument("quadruple_additive needs dual gamma = 1");
    MixedMatrix out(Shape{2 * a, a + 4 * b});
    for (const auto& r : h.rows()) {
        std::vector<std::uint8_t> bin(r.bin());
        bin.insert(bin.end(), r.bin().begin(), r.bin().end());
        std::vector<std::uint8_t> quat;
        quat.reserve(a + 4 * b);
        for (std::size_t i = 0; i < a; ++i)
            quat.push_back(static_cast<std::uint8_t>(2 * r.bin(i)));
        for (int rep = 0; rep < 4; ++rep)
            quat.insert(quat.end(), r.quat().begin(), r.quat().end());
        out.append_row(MixedVector(std::move(bin), std::move(quat)));
    }
    std::vector<std::uint8_t> bin(2 * a, 0), quat(a + 4 * b, 0);
    for (std::size_t i = a; i < 2 * a; ++i) bin[i] = 1;
    for (std::size_t i = 0; i < a; ++i) quat[i] = 1;
    for (std::size_t j = 0; j < 4 * b; ++j)
        quat[a + j] = static_cast<std::uint8_t>(j / b);
    out.append_row(MixedVector(std::move(bin), std::move(quat)));
    return out;
}

Monomial transposition(Shape s, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > s.width() || j > s.width())
        throw std::invalid_argument("transposition out of range");
    Monomial m(s);
    std::vector<std::uint32_t> p = m.perm();
    std::swap(p[i - 1], p[j - 1]);
    return Monomial(s, std::move(p));
}

Monomial double_quaternary_pi(std::size_t beta) {
    return transposition(Shape{0, 2 * beta}, 1, beta + 1);
}
Monomial quadruple_quaternary_pi1(std::size_t beta) {
    return transposition(Shape{0, 4 * beta}, 1, beta + 1);
}
Monomial quadruple_quaternary_pi2(std::size_t beta) {
    return transposition(Shape{0, 4 * beta}, 1, 2 * beta + 1);
}

std::vector<Monomial> double_additive_pis(Shape base) {
    const std::size_t a = base.alpha, b = base.beta;
    Shape s{2 * a, 2 * b};
    return {Monomial(s), transposition(s, 1, a + 1),
            transposition(s, 2 * a + 1, 2 * a + b + 1)};
}

std::vector<Monomial> quadruple_additive_pis(Shape base) {
    const std::size_t a = base.alpha, b = base.beta;
    Shape s{2 * a, a + 4 * b};
    return {Monomial(s), transposition(s, 2 * a + 1, 3 * a + b + 1),
            transposition(s, 3 * a + 1, 3 * a + 2 * b + 1), transposition(s, 1, a + 1)};
}

Monomial block_lift(const Monomial& m, std::size_t copies) {
    if (m.shape().alpha != 0)
        throw std::invalid_argument("block_lift needs alpha = 0");
    const std::size_t beta = m.shape().beta;
    Shape s{0, beta * copies};
    std::vector<std::uint32_t> perm(s.width());
    std::vector<std::uint8_t> signs(s.beta, 0);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t j = 0; j < beta; ++j) {
            perm[c * beta + j] = static_cast<std::uint32_t>(c * beta + m.perm()[j]);
            signs[c * beta + j] = m.signs()[j];
        }
    return Monomial(s, std::move(perm), std::move(signs));
}

LexPair lemma_lex_pair(std::size_t m) {
    if (m < 2) throw std::invalid_argument("lemma_lex_pair requires m >= 2");
    const std::size_t beta = std::size_t{1} << (2 * m);
    LexPair out{MixedMatrix(Shape{0, beta}), MixedMatrix(Shape{0, beta}), {}};

    out.h1.append_row(quat_row(std::vector<std::uint8_t>(beta, 1)));
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<std::uint8_t> q(beta);
        for (std::size_t c = 0; c < beta; ++c)
            q[c] = static_cast<std::uint8_t>((c >> (2 * (m - i))) & 3u);
        out.h1.append_row(quat_row(std::move(q)));
    }

    MixedMatrix ext = extended_hamming_parity(2 * m);
    for (const auto& r : ext.rows()) {
        std::vector<std::uint8_t> q(beta);
        for (std::size_t c = 0; c < beta; ++c)
            q[c] = static_cast<std::uint8_t>(2 * r.bin(c));
        out.h2.append_row(quat_row(std::move(q)));
    }
    out.h2.append_row(quat_row(std::vector<std::uint8_t>(beta, 1)));

    // sigma_i swaps two coordinates whose base-4 digit i differs in
    // parity while all other digits agree, so it fixes 2q_j for j != i.
    for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t step = std::size_t{1} << (2 * (m - i));
        out.sigmas.push_back(
            transposition(Shape{0, beta}, 2 * step + 1, 3 * step + 1));
    }
    return out;
}

MixedMatrix paper_matrix(const std::string& name) {
    if (name == "ex1-perfect")
        return literal(7, 4, {"0001111|0022", "0110011|0202", "1010101|1111"});
    if (name == "ex1-extended")
        return literal(8, 4,
                       {"11111111|2222", "00001111|0022", "00110011|0202",
                        "01010101|1111"});
    if (name == "ex2-t5-delta2" || name == "sec32-m2-H1")
        return literal(0, 16,
                       {"0000000022222222", "0000222200002222", "1111111111111111",
                        "0123012301230123"});
    if (name == "qlpc-t3-H1") return literal(0, 4, {"0022", "0202", "1111"});
    if (name == "qlpc-t3-H2") return literal(0, 4, {"1111", "0123"});
    if (name == "qlpc-t4-H1")
        return literal(0, 8,
                       {"22222222", "00002222", "00220022", "02020202", "11111111"});
    if (name == "qlpc-t4-H2") return literal(0, 8, {"00002222", "11111111", "01230123"});
    if (name == "sec32-m2-H2")
        return literal(0, 16,
                       {"1111111111111111", "0000111122223333", "0123012301230123"});
    if (name == "sec4-exbeta4z2z4-H2")
        return literal(4, 2, {"1111|22", "0011|02", "0101|11"});
    if (name == "sec4-lemma17-H1")
        return literal(4, 6, {"1111|222222", "0011|111102", "0101|012311"});
    throw std::invalid_argument("unknown paper matrix: " + name);
}

std::vector<std::string> paper_matrix_names() {
    return {"ex1-perfect",  "ex1-extended", "ex2-t5-delta2", "qlpc-t3-H1",
            "qlpc-t3-H2",   "qlpc-t4-H1",   "qlpc-t4-H2",    "sec32-m2-H1",
            "sec32-m2-H2",  "sec4-exbeta4z2z4-H2", "sec4-lemma17-H1"};
}

}  // namespace z2z4
