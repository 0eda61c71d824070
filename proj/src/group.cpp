#include "cdlat/group.hpp"

#include <numeric>

#include "cdlat/arith.hpp"

namespace cdlat {

Group::Group(std::vector<std::vector<int>> table, std::string label, int max_order)
    : n_(static_cast<int>(table.size())), label_(std::move(label)) {
    if (n_ == 0) throw invalid_parameter("group table must be non-empty");
    table_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n_)
            throw invalid_parameter("group table must be square");
        table_.insert(table_.end(), row.begin(), row.end());
    }
    validate_and_index(max_order);
}

void Group::validate_and_index(int max_order) {
    if (n_ > max_order)
        throw capacity_error("group order " + std::to_string(n_) +
                             " exceeds the max-order cap " + std::to_string(max_order));
    for (int v : table_)
        if (v < 0 || v >= n_) throw invalid_parameter("table entry out of range");

    identity_ = -1;
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int j = 0; j < n_ && ok; ++j)
            ok = mul(e, j) == j && mul(j, e) == j;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw invalid_parameter("table has no identity element");

    inverse_.assign(static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (inverse_[static_cast<std::size_t>(a)] < 0)
            throw invalid_parameter("element " + std::to_string(a) + " has no two-sided inverse");
    }

    // Full associativity scan; the order cap keeps this O(n^3) affordable.
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            int ij = mul(i, j);
            for (int k = 0; k < n_; ++k)
                if (mul(ij, k) != mul(i, mul(j, k)))
                    throw invalid_parameter("table is not associative");
        }

    order_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        int x = i, k = 1;
        while (x != identity_) {
            x = mul(x, i);
            ++k;
        }
        order_[static_cast<std::size_t>(i)] = k;
    }

    abelian_ = true;
    for (int i = 0; i < n_ && abelian_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (mul(i, j) != mul(j, i)) {
                abelian_ = false;
                break;
            }
}

int Group::element_order(int i) const {
    if (i < 0 || i >= n_) throw invalid_parameter("element index out of range");
    return order_[static_cast<std::size_t>(i)];
}

ElementInfo Group::element_info(int i) const {
    if (i < 0 || i >= n_) throw invalid_parameter("element index out of range");
    return ElementInfo{i, order_[static_cast<std::size_t>(i)],
                       inverse_[static_cast<std::size_t>(i)]};
}

int Group::power(int g, long long e) const {
    if (e < 0) return power(inverse(g), -e);
    int r = identity_;
    int b = g;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Group make_cyclic(int n, int max_order) {
    if (n < 1) throw invalid_parameter("cyclic group order must be >= 1");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return Group(std::move(t), "C" + std::to_string(n), max_order);
}

Group make_dihedral(int two_n, int max_order) {
    if (two_n < 2 || two_n % 2 != 0)
        throw invalid_parameter("dihedral order must be a positive even integer");
    int n = two_n / 2;
    // elements: i < n rotation r^i, n+i reflection r^i s
    auto rot = [&](int i) { return ((i % n) + n) % n; };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(two_n),
                                    std::vector<int>(static_cast<std::size_t>(two_n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t[i][j] = rot(i + j);              // r^i r^j
            t[i][n + j] = n + rot(i + j);      // r^i (r^j s)
            t[n + i][j] = n + rot(i - j);      // (r^i s) r^j
            t[n + i][n + j] = rot(i - j);      // (r^i s)(r^j s)
        }
    return Group(std::move(t), "D" + std::to_string(two_n), max_order);
}

Group make_dicyclic(int n, int max_order) {
    if (n < 1) throw invalid_parameter("dicyclic parameter must be >= 1");
    int two_n = 2 * n;
    int order = 4 * n;
    auto rot = [&](int i) { return ((i % two_n) + two_n) % two_n; };
    // elements: i < 2n is a^i, 2n+i is a^i b
    std::vector<std::vector<int>> t(static_cast<std::size_t>(order),
                                    std::vector<int>(static_cast<std::size_t>(order)));
    for (int i = 0; i < two_n; ++i)
        for (int j = 0; j < two_n; ++j) {
            t[i][j] = rot(i + j);                        // a^i a^j
            t[i][two_n + j] = two_n + rot(i + j);        // a^i (a^j b)
            t[two_n + i][j] = two_n + rot(i - j);        // (a^i b) a^j
            t[two_n + i][two_n + j] = rot(i - j + n);    // (a^i b)(a^j b), b^2 = a^n
        }
    bool pow2 = (order & (order - 1)) == 0;
    std::string label = pow2 ? "Q" + std::to_string(order) : "Dic" + std::to_string(n);
    return Group(std::move(t), std::move(label), max_order);
}

Group direct_product(const Group& g, const Group& h, int max_order) {
    long long order = static_cast<long long>(g.order()) * h.order();
    if (order > max_order)
        throw capacity_error("direct product order " + std::to_string(order) +
                             " exceeds the max-order cap " + std::to_string(max_order));
    int n = static_cast<int>(order);
    int hn = h.order();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = g.mul(a / hn, b / hn) * hn + h.mul(a % hn, b % hn);
    return Group(std::move(t), g.label() + "x" + h.label(), max_order);
}

Group semidirect_cyclic(int m, int n, int t, int max_order) {
    if (m < 1 || n < 1 || t < 1) throw invalid_parameter("SDP parameters must be >= 1");
    if (std::gcd(t, m) != 1)
        throw invalid_action("SDP twist t=" + std::to_string(t) +
                             " is not coprime to m=" + std::to_string(m));
    if (pow_mod(t, n, m) != 1 % m)
        throw invalid_action("SDP twist fails t^n = 1 (mod m) for t=" + std::to_string(t) +
                             ", n=" + std::to_string(n) + ", m=" + std::to_string(m));
    long long order = static_cast<long long>(m) * n;
    if (order > max_order)
        throw capacity_error("SDP order " + std::to_string(order) +
                             " exceeds the max-order cap " + std::to_string(max_order));
    std::vector<long long> tpow(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) tpow[static_cast<std::size_t>(j)] = pow_mod(t, j, m);
    int sz = static_cast<int>(order);
    std::vector<std::vector<int>> tab(static_cast<std::size_t>(sz),
                                      std::vector<int>(static_cast<std::size_t>(sz)));
    for (int a = 0; a < sz; ++a) {
        int i = a / n, j = a % n;
        for (int b = 0; b < sz; ++b) {
            int i2 = b / n, j2 = b % n;
            int ri = static_cast<int>((i + tpow[static_cast<std::size_t>(j)] * i2) % m);
            tab[a][b] = ri * n + (j + j2) % n;
        }
    }
    std::string label = "SDP(" + std::to_string(m) + "," + std::to_string(n) + "," +
                        std::to_string(t) + ")";
    return Group(std::move(tab), std::move(label), max_order);
}

Group semidirect_general(const Group& n_grp, const Group& h_grp,
                         const std::vector<std::vector<int>>& action, int max_order) {
    int nn = n_grp.order(), nh = h_grp.order();
    if (static_cast<int>(action.size()) != nh)
        throw invalid_parameter("action must map every element of H");
    for (int h = 0; h < nh; ++h) {
        const auto& perm = action[static_cast<std::size_t>(h)];
        if (static_cast<int>(perm.size()) != nn)
            throw invalid_parameter("action permutation has wrong size");
        std::vector<char> seen(static_cast<std::size_t>(nn), 0);
        for (int v : perm) {
            if (v < 0 || v >= nn || seen[static_cast<std::size_t>(v)])
                throw invalid_action("action entry is not a permutation of N");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (int x = 0; x < nn; ++x)
            for (int y = 0; y < nn; ++y)
                if (perm[static_cast<std::size_t>(n_grp.mul(x, y))] !=
                    n_grp.mul(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]))
                    throw invalid_action("action of H-element " + std::to_string(h) +
                                         " is not an automorphism of N");
    }
    for (int h1 = 0; h1 < nh; ++h1)
        for (int h2 = 0; h2 < nh; ++h2) {
            const auto& composed = action[static_cast<std::size_t>(h_grp.mul(h1, h2))];
            const auto& f1 = action[static_cast<std::size_t>(h1)];
            const auto& f2 = action[static_cast<std::size_t>(h2)];
            for (int x = 0; x < nn; ++x)
                if (composed[static_cast<std::size_t>(x)] !=
                    f1[static_cast<std::size_t>(f2[static_cast<std::size_t>(x)])])
                    throw invalid_action("action is not a homomorphism H -> Aut(N)");
        }

    long long order = static_cast<long long>(nn) * nh;
    if (order > max_order)
        throw capacity_error("semidirect product order " + std::to_string(order) +
                             " exceeds the max-order cap " + std::to_string(max_order));
    int sz = static_cast<int>(order);
    std::vector<std::vector<int>> tab(static_cast<std::size_t>(sz),
                                      std::vector<int>(static_cast<std::size_t>(sz)));
    for (int a = 0; a < sz; ++a) {
        int x = a / nh, h = a % nh;
        const auto& act = action[static_cast<std::size_t>(h)];
        for (int b = 0; b < sz; ++b) {
            int x2 = b / nh, h2 = b % nh;
            tab[a][b] = n_grp.mul(x, act[static_cast<std::size_t>(x2)]) * nh + h_grp.mul(h, h2);
        }
    }
    return Group(std::move(tab), n_grp.label() + ":" + h_grp.label(), max_order);
}

}  // namespace cdlat
