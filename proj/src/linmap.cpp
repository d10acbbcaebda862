#include "ydlab/linmap.hpp"

#include <sstream>

namespace ydlab {

Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw Error(ErrorKind::MalformedInput, "empty rational literal");
    size_t slash = text.find('/');
    auto check_int = [&](const std::string& part, bool deny_sign) {
        if (part.empty()) return false;
        size_t i = 0;
        if (!deny_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!check_int(text, false))
                throw Error(ErrorKind::MalformedInput, "bad rational literal '" + text + "'");
            return Scalar(mpz_class(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!check_int(num, false) || !check_int(den, true) || mpz_class(den) == 0)
            throw Error(ErrorKind::MalformedInput, "bad rational literal '" + text + "'");
        Scalar q{mpz_class(num), mpz_class(den)};
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::MalformedInput, "bad rational literal '" + text + "'");
    }
}

std::string scalar_str(const Scalar& s) {
    if (s.get_den() == 1) return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

LinMap::LinMap(int cod_dim, int dom_dim) : cod_(cod_dim), dom_(dom_dim) {
    if (cod_dim < 1 || dom_dim < 1)
        throw Error(ErrorKind::MalformedInput, "map dimensions must be positive");
    e_.assign(static_cast<size_t>(cod_) * dom_, Scalar(0));
}

LinMap LinMap::identity(int n) {
    LinMap m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

LinMap LinMap::flip(int m, int n) {
    if (m < 1 || n < 1) throw Error(ErrorKind::MalformedInput, "flip dimensions must be positive");
    LinMap p(m * n, m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) p.at(j * m + i, i * n + j) = 1;
    return p;
}

LinMap LinMap::scalar(const Scalar& value) {
    LinMap m(1, 1);
    m.at(0, 0) = value;
    return m;
}

LinMap LinMap::from_rows(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows[0].empty())
        throw Error(ErrorKind::MalformedInput, "matrix literal must be non-empty");
    LinMap m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw Error(ErrorKind::MalformedInput, "ragged matrix literal");
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = parse_scalar(rows[r][c]);
    }
    return m;
}

bool LinMap::operator==(const LinMap& other) const {
    return cod_ == other.cod_ && dom_ == other.dom_ && e_ == other.e_;
}

bool LinMap::is_identity() const { return cod_ == dom_ && *this == identity(dom_); }

LinMap LinMap::operator+(const LinMap& other) const {
    if (cod_ != other.cod_ || dom_ != other.dom_)
        throw Error(ErrorKind::DimensionMismatch, "sum of maps with different shapes");
    LinMap r(cod_, dom_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + other.e_[i];
    return r;
}

LinMap LinMap::operator*(const Scalar& c) const {
    LinMap r(cod_, dom_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

LinMap LinMap::inverse() const {
    if (cod_ != dom_) throw Error(ErrorKind::NotInvertible, "only square maps can be inverted");
    int n = dom_;
    LinMap a(*this);
    LinMap inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error(ErrorKind::NotInvertible, "singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        Scalar p = a.at(col, col);
        for (int c = 0; c < n; ++c) {
            a.at(col, c) /= p;
            inv.at(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            Scalar factor = a.at(r, col);
            for (int c = 0; c < n; ++c) {
                a.at(r, c) -= factor * a.at(col, c);
                inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::optional<LinMap::Difference> LinMap::first_difference(const LinMap& a, const LinMap& b) {
    if (a.cod_ != b.cod_ || a.dom_ != b.dom_) {
        Difference d;
        d.row = -1;
        d.col = -1;
        d.lhs = std::to_string(a.cod_) + "x" + std::to_string(a.dom_);
        d.rhs = std::to_string(b.cod_) + "x" + std::to_string(b.dom_);
        return d;
    }
    for (int r = 0; r < a.cod_; ++r)
        for (int c = 0; c < a.dom_; ++c)
            if (a.at(r, c) != b.at(r, c)) {
                Difference d;
                d.row = r;
                d.col = c;
                d.lhs = scalar_str(a.at(r, c));
                d.rhs = scalar_str(b.at(r, c));
                return d;
            }
    return std::nullopt;
}

std::string LinMap::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int r = 0; r < cod_; ++r) {
        out << (r ? ", [" : "[");
        for (int c = 0; c < dom_; ++c) out << (c ? " " : "") << scalar_str(at(r, c));
        out << "]";
    }
    out << "]";
    return out.str();
}

std::vector<std::vector<std::string>> LinMap::to_rows() const {
    std::vector<std::vector<std::string>> rows(cod_);
    for (int r = 0; r < cod_; ++r) {
        rows[r].reserve(dom_);
        for (int c = 0; c < dom_; ++c) rows[r].push_back(scalar_str(at(r, c)));
    }
    return rows;
}

LinMap compose(const LinMap& f, const LinMap& g) {
    if (f.dom() != g.cod())
        throw Error(ErrorKind::DimensionMismatch,
                    "compose: inner dimensions " + std::to_string(f.dom()) + " vs " +
                        std::to_string(g.cod()));
    LinMap r(f.cod(), g.dom());
    for (int i = 0; i < f.cod(); ++i)
        for (int k = 0; k < f.dom(); ++k) {
            const Scalar& fik = f.at(i, k);
            if (fik == 0) continue;
            for (int j = 0; j < g.dom(); ++j) {
                const Scalar& gkj = g.at(k, j);
                if (gkj == 0) continue;
                r.at(i, j) += fik * gkj;
            }
        }
    return r;
}

LinMap kron(const LinMap& f, const LinMap& g) {
    LinMap r(f.cod() * g.cod(), f.dom() * g.dom());
    for (int i = 0; i < f.cod(); ++i)
        for (int j = 0; j < f.dom(); ++j) {
            const Scalar& fij = f.at(i, j);
            if (fij == 0) continue;
            for (int k = 0; k < g.cod(); ++k)
                for (int l = 0; l < g.dom(); ++l) {
                    const Scalar& gkl = g.at(k, l);
                    if (gkl == 0) continue;
                    r.at(i * g.cod() + k, j * g.dom() + l) = fij * gkl;
                }
        }
    return r;
}

}  // namespace ydlab
