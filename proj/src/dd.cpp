#include "lfpoly/dd.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

#include "lfpoly/simplex.hpp"

namespace lfpoly {

namespace {

using Bits = std::vector<uint64_t>;

struct Ray {
    VectorXq z;
    Bits zero; // tightness per processed constraint, in processing order
};

void set_bit(Bits& b, int i) { b[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }

int popcount_and(const Bits& a, const Bits& b) {
    int c = 0;
    for (size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

bool contains_and(const Bits& z, const Bits& a, const Bits& b) {
    for (size_t w = 0; w < z.size(); ++w) {
        const uint64_t meet = a[w] & b[w];
        if ((z[w] & meet) != meet) return false;
    }
    return true;
}

// Greedy selection of rank-many linearly independent rows, in order.
std::vector<int> independent_rows(const MatrixXq& A) {
    const int n = static_cast<int>(A.cols());
    std::vector<int> chosen;
    MatrixXq work(n, n);
    int r = 0;
    for (int i = 0; i < A.rows() && r < n; ++i) {
        work.row(r) = A.row(i);
        // eliminate against previous pivot rows
        MatrixXq sub = work.topRows(r + 1);
        if (rank(sub) == r + 1) {
            chosen.push_back(i);
            ++r;
        }
    }
    return chosen;
}

// Solve B X = I for the standard double description start: the columns of
// B^-1 are the extreme rays of the simplicial cone of the first n
// independent constraints.
MatrixXq invert(MatrixXq B) {
    const int n = static_cast<int>(B.rows());
    MatrixXq inv = MatrixXq::Identity(n, n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i) {
            if (B(i, c) != 0) { pivot = i; break; }
        }
        B.row(pivot).swap(B.row(c));
        inv.row(pivot).swap(inv.row(c));
        const Rational p = B(c, c);
        B.row(c) /= p;
        inv.row(c) /= p;
        for (int i = 0; i < n; ++i) {
            if (i == c || B(i, c) == 0) continue;
            const Rational f = B(i, c);
            B.row(i) -= f * B.row(c);
            inv.row(i) -= f * inv.row(c);
        }
    }
    return inv;
}

std::vector<VectorXq> dd_core(const MatrixXq& A, const std::vector<int>& order) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    const size_t words = (static_cast<size_t>(m) + 63) / 64;

    std::vector<int> init = independent_rows([&] {
        MatrixXq reordered(m, n);
        for (int i = 0; i < m; ++i) reordered.row(i) = A.row(order[static_cast<size_t>(i)]);
        return reordered;
    }());
    // init holds positions within `order`

    MatrixXq B(n, n);
    for (int k = 0; k < n; ++k) B.row(k) = A.row(order[static_cast<size_t>(init[static_cast<size_t>(k)])]);
    const MatrixXq Binv = invert(B);

    std::vector<Ray> rays;
    rays.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        Ray r;
        r.z = Binv.col(j);
        make_primitive(r.z);
        r.zero.assign(words, 0);
        for (int k = 0; k < n; ++k) {
            if (k != j) set_bit(r.zero, k);
        }
        rays.push_back(std::move(r));
    }

    // processing order: the n independent initializers first, then the rest
    std::vector<int> remaining;
    {
        std::vector<char> used(static_cast<size_t>(m), 0);
        for (int pos : init) used[static_cast<size_t>(pos)] = 1;
        for (int pos = 0; pos < m; ++pos) {
            if (!used[static_cast<size_t>(pos)]) remaining.push_back(pos);
        }
    }

    int processed = n;
    for (int pos : remaining) {
        const auto row = A.row(order[static_cast<size_t>(pos)]);
        const int bit = processed++;

        std::vector<Rational> val(rays.size());
        std::vector<int> plus, minus, zero;
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = row.dot(rays[i].z);
            if (val[i] > 0) plus.push_back(static_cast<int>(i));
            else if (val[i] < 0) minus.push_back(static_cast<int>(i));
            else zero.push_back(static_cast<int>(i));
        }
        if (minus.empty()) {
            for (int i : zero) set_bit(rays[static_cast<size_t>(i)].zero, bit);
            continue;
        }

        // Adjacent (plus, minus) pairs across the hyperplane spawn the new
        // rays. Combinatorial adjacency: no third extreme ray's zero set
        // contains the pair's common tight set. Valid because every
        // intermediate cone here is pointed. The popcount cut is a
        // necessary condition (a 2-face needs n-2 independent tight
        // constraints), so it only skips non-adjacent pairs.
        std::vector<Ray> born;
        for (int ip : plus) {
            const Ray& rp = rays[static_cast<size_t>(ip)];
            for (int iq : minus) {
                const Ray& rq = rays[static_cast<size_t>(iq)];
                if (popcount_and(rp.zero, rq.zero) < n - 2) continue;
                bool adjacent = true;
                for (size_t k = 0; k < rays.size(); ++k) {
                    if (static_cast<int>(k) == ip || static_cast<int>(k) == iq) continue;
                    if (contains_and(rays[k].zero, rp.zero, rq.zero)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                Ray fresh;
                fresh.z = val[static_cast<size_t>(ip)] * rq.z - val[static_cast<size_t>(iq)] * rp.z;
                make_primitive(fresh.z);
                fresh.zero.assign(words, 0);
                for (size_t w = 0; w < words; ++w) fresh.zero[w] = rp.zero[w] & rq.zero[w];
                set_bit(fresh.zero, bit);
                born.push_back(std::move(fresh));
            }
        }

        std::vector<Ray> next;
        next.reserve(plus.size() + zero.size() + born.size());
        for (int i : plus) next.push_back(std::move(rays[static_cast<size_t>(i)]));
        for (int i : zero) {
            set_bit(rays[static_cast<size_t>(i)].zero, bit);
            next.push_back(std::move(rays[static_cast<size_t>(i)]));
        }
        for (auto& r : born) next.push_back(std::move(r));
        rays = std::move(next);
    }

    std::vector<VectorXq> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.z));
    return out;
}

} // namespace

std::vector<VectorXq> extreme_rays(const MatrixXq& A) {
    if (rank(A) < A.cols()) throw InvalidArgument("extreme_rays: cone is not pointed");
    // Constraints are inserted in input order. Callers hand over canonically
    // sorted data, which keeps the run deterministic; on this project's
    // inputs that order also keeps intermediate ray counts far below what
    // incidence-based reorderings produce.
    std::vector<int> order(static_cast<size_t>(A.rows()));
    std::iota(order.begin(), order.end(), 0);
    return dd_core(A, order);
}

HRepresentation dd_facets(const VRepresentation& v) {
    const int d = v.dimension;
    if (v.vertices.empty()) throw InvalidArgument("dd_facets: empty vertex list");
    const int ar = affine_rank(v.vertices);
    if (ar < d + 1) {
        throw DegenerateInput("dd_facets: input spans a " + std::to_string(ar - 1) +
                                  "-dimensional affine subspace of " + std::to_string(d) + "-space",
                              ar - 1);
    }
    MatrixXq A(static_cast<Eigen::Index>(v.vertices.size()), d + 1);
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        A(i, 0) = 1;
        A.row(i).tail(d) = v.vertices[static_cast<size_t>(i)].transpose();
    }
    HRepresentation h;
    h.dimension = d;
    for (const auto& ray : extreme_rays(A)) {
        HRow row;
        row.coeffs = -ray.tail(d);
        row.bound = ray(0);
        h.rows.push_back(std::move(row));
    }
    h.normalize_and_sort();
    return h;
}

VRepresentation dd_vertices(const HRepresentation& h) {
    const int d = h.dimension;
    const int m = static_cast<int>(h.rows.size());

    MatrixXq rows(m, d);
    VectorXq bounds(m);
    for (int i = 0; i < m; ++i) {
        rows.row(i) = h.rows[static_cast<size_t>(i)].coeffs.transpose();
        bounds(i) = h.rows[static_cast<size_t>(i)].bound;
    }
    const auto feas = maximize_over_polyhedron(VectorXq::Zero(d), rows, bounds);
    if (feas.status == InequalityLPResult::Status::Infeasible)
        throw Empty("dd_vertices: infeasible system");

    // Homogenize: rows (bound, -coeffs) plus the explicit t >= 0 row.
    MatrixXq A(m + 1, d + 1);
    for (int i = 0; i < m; ++i) {
        A(i, 0) = bounds(i);
        A.row(i).tail(d) = -rows.row(i);
    }
    A.row(m).setZero();
    A(m, 0) = 1;
    if (rank(A) < d + 1) throw Unbounded("dd_vertices: polyhedron contains a line");

    VRepresentation out;
    out.dimension = d;
    for (const auto& ray : extreme_rays(A)) {
        if (ray(0) == 0) throw Unbounded("dd_vertices: recession direction found");
        VectorXq p = ray.tail(d) / ray(0);
        out.vertices.push_back(std::move(p));
    }
    out.sort_and_dedupe();
    return out;
}

HRepresentation remove_redundant(const HRepresentation& h) {
    HRepresentation current = h;
    current.normalize_and_sort(); // also removes positive scalar multiples

    // Ask, row by row, whether the rest of the system already implies it.
    for (size_t i = 0; i < current.rows.size();) {
        const HRow& candidate = current.rows[i];
        const int m = static_cast<int>(current.rows.size());
        MatrixXq rows(m, current.dimension);
        VectorXq bounds(m);
        for (int k = 0; k < m; ++k) {
            const auto& r = current.rows[static_cast<size_t>(k)];
            rows.row(k) = r.coeffs.transpose();
            // keep the candidate itself, with slack, to rule out unboundedness
            bounds(k) = (static_cast<size_t>(k) == i) ? Rational(r.bound + 1) : r.bound;
        }
        const auto lp = maximize_over_polyhedron(candidate.coeffs, rows, bounds);
        if (lp.status == InequalityLPResult::Status::Infeasible)
            throw Empty("remove_redundant: infeasible system");
        if (lp.status == InequalityLPResult::Status::Optimal && lp.value <= candidate.bound) {
            current.rows.erase(current.rows.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return current;
}

std::vector<int> tight_vertices(const HRow& row, const VRepresentation& v) {
    std::vector<int> out;
    for (size_t i = 0; i < v.vertices.size(); ++i) {
        if (slack(row, v.vertices[i]) == 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

bool is_facet_of(const HRow& row, const VRepresentation& v) {
    std::vector<VectorXq> tight;
    for (const auto& vert : v.vertices) {
        const Rational s = slack(row, vert);
        if (s > 0) return false;
        if (s == 0) tight.push_back(vert);
    }
    return affine_rank(tight) >= v.dimension;
}

HRepresentation reduce_against(const HRepresentation& h, const VRepresentation& v) {
    HRepresentation out;
    out.dimension = h.dimension;
    for (const auto& row : h.rows) {
        if (is_facet_of(row, v)) out.rows.push_back(row);
    }
    out.normalize_and_sort();
    return out;
}

} // namespace lfpoly
