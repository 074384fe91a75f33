#pragma once

// Naive reference implementations used as test oracles. They work on plain
// adjacency matrices and GMP rationals and share no code with the library.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mbal/frame.hpp"
#include "mbal/func.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Vec = std::vector<mpq_class>;

inline Matrix matrix_of(const mbal::Frame& f)
{
    Matrix m(f.size(), std::vector<bool>(f.size(), false));
    for (std::size_t x = 0; x < f.size(); ++x) {
        for (std::size_t y = 0; y < f.size(); ++y) {
            m[x][y] = f.related(x, y);
        }
    }
    return m;
}

inline Matrix matrix_of_code(std::size_t n, std::uint64_t code)
{
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            m[x][y] = (code >> (x * n + y)) & 1U;
        }
    }
    return m;
}

inline Vec vec_of(const mbal::Func& f)
{
    Vec v;
    for (std::size_t i = 0; i < f.size(); ++i) {
        v.push_back(f[i].to_mpq());
    }
    return v;
}

inline Vec box(const Matrix& r, const Vec& f)
{
    Vec out;
    for (std::size_t x = 0; x < r.size(); ++x) {
        bool any = false;
        mpq_class best;
        for (std::size_t y = 0; y < r.size(); ++y) {
            if (r[x][y] && (!any || f[y] < best)) {
                best = f[y];
                any = true;
            }
        }
        out.push_back(any ? best : mpq_class{1});
    }
    return out;
}

inline Vec diamond(const Matrix& r, const Vec& f)
{
    Vec out;
    for (std::size_t x = 0; x < r.size(); ++x) {
        bool any = false;
        mpq_class best;
        for (std::size_t y = 0; y < r.size(); ++y) {
            if (r[x][y] && (!any || f[y] > best)) {
                best = f[y];
                any = true;
            }
        }
        out.push_back(any ? best : mpq_class{0});
    }
    return out;
}

inline std::set<std::size_t> preimage(const Matrix& r, const std::set<std::size_t>& u)
{
    std::set<std::size_t> out;
    for (std::size_t x = 0; x < r.size(); ++x) {
        for (std::size_t y : u) {
            if (r[x][y]) {
                out.insert(x);
            }
        }
    }
    return out;
}

inline bool serial(const Matrix& r)
{
    return std::all_of(r.begin(), r.end(), [](const auto& row) { return std::find(row.begin(), row.end(), true) != row.end(); });
}

inline bool reflexive(const Matrix& r)
{
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (!r[x][x]) {
            return false;
        }
    }
    return true;
}

inline bool symmetric(const Matrix& r)
{
    for (std::size_t x = 0; x < r.size(); ++x) {
        for (std::size_t y = 0; y < r.size(); ++y) {
            if (r[x][y] && !r[y][x]) {
                return false;
            }
        }
    }
    return true;
}

inline bool transitive(const Matrix& r)
{
    for (std::size_t x = 0; x < r.size(); ++x) {
        for (std::size_t y = 0; y < r.size(); ++y) {
            for (std::size_t z = 0; z < r.size(); ++z) {
                if (r[x][y] && r[y][z] && !r[x][z]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// m(R[x]) = S[m(x)] with explicit sets.
inline bool bounded(const Matrix& r, const Matrix& s, const std::vector<std::size_t>& m)
{
    for (std::size_t x = 0; x < r.size(); ++x) {
        std::set<std::size_t> lhs;
        std::set<std::size_t> rhs;
        for (std::size_t y = 0; y < r.size(); ++y) {
            if (r[x][y]) {
                lhs.insert(m[y]);
            }
        }
        for (std::size_t z = 0; z < s.size(); ++z) {
            if (s[m[x]][z]) {
                rhs.insert(z);
            }
        }
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

// X \ R^{-1}[X \ U], with U and the result as sorted index sets.
inline std::set<std::size_t> classical_box(const Matrix& r, const std::set<std::size_t>& u)
{
    std::set<std::size_t> rest;
    for (std::size_t y = 0; y < r.size(); ++y) {
        if (!u.count(y)) {
            rest.insert(y);
        }
    }
    const auto pre = preimage(r, rest);
    std::set<std::size_t> out;
    for (std::size_t x = 0; x < r.size(); ++x) {
        if (!pre.count(x)) {
            out.insert(x);
        }
    }
    return out;
}

inline std::set<std::size_t> set_of(mbal::PointSet s)
{
    auto idx = s.indices();
    return {idx.begin(), idx.end()};
}

} // namespace oracle
