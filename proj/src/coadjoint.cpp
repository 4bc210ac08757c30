#include "momentcut/coadjoint.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <random>
#include <thread>

namespace momentcut {

namespace {

const Rational kResolution(1, 1000000000000LL);

QVector rationalize(const Eigen::VectorXd& x) {
    QVector q(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) q(i) = momentcut::rationalize(x(i), kResolution);
    return q;
}

Eigen::VectorXd sample_diagonal(std::mt19937_64& rng, const Eigen::VectorXd& lambda) {
    const Eigen::Index n = lambda.size();
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(i, j) = std::complex<double>(re, im);
        }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Phase correction makes the distribution of q independent of the QR sign convention.
    for (Eigen::Index j = 0; j < n; ++j) {
        const double a = std::abs(r(j, j));
        if (a > 0) q.col(j) *= r(j, j) / a;
    }
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) d(i) += std::norm(q(i, j)) * lambda(j);
    return d;
}

double squared_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).squaredNorm(); }

} // namespace

Polyhedron kostant_polytope(const RootSystem& rs, const QVector& lambda) {
    if (lambda.size() != rs.rank) throw InputShapeError("kostant_polytope: weight of the wrong dimension");
    if (!Polyhedron::from_h(chamber(rs)).contains(lambda)) throw NotDominantError("lambda is not dominant");
    return Polyhedron::from_points(rs.rank, weyl_orbit(rs, lambda));
}

Polyhedron schur_horn_polytope(const std::vector<Rational>& lambda) {
    const Eigen::Index n = static_cast<Eigen::Index>(lambda.size());
    if (n < 1) throw InputShapeError("schur_horn_polytope: empty spectrum");
    for (Eigen::Index i = 1; i < n; ++i)
        if (lambda[static_cast<std::size_t>(i)] > lambda[static_cast<std::size_t>(i - 1)])
            throw DomainError("spectrum must be weakly decreasing");
    Rational mean(0);
    for (const auto& l : lambda) mean += l;
    mean /= Rational(n);
    if (n == 1) return Polyhedron::point(qvec({lambda[0]}));

    const RootSystem rs = build_root_system(Family::A, static_cast<int>(n - 1));
    QVector omega(n - 1);
    for (Eigen::Index i = 0; i + 1 < n; ++i) omega(i) = lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(i + 1)];
    const Polyhedron k = kostant_polytope(rs, omega);
    std::vector<QVector> pts;
    for (const auto& v : k.v().vertices) {
        QVector e = a_weight_to_epsilon(v);
        for (Eigen::Index i = 0; i < n; ++i) e(i) += mean;
        pts.push_back(e);
    }
    return Polyhedron::from_points(n, pts);
}

unsigned sampling_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("MOMENTCUT_THREADS")) {
        const long c = std::strtol(cap, nullptr, 10);
        if (c >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(c));
    }
    return n;
}

SampleCloud schur_horn_sample(const Spectrum& spectrum, std::size_t count, std::uint64_t seed) {
    if (count < 1) throw DomainError("schur_horn_sample: count must be at least 1");
    const std::size_t n = spectrum.values.size();
    if (n < 1) throw InputShapeError("schur_horn_sample: empty spectrum");
    for (std::size_t i = 1; i < n; ++i)
        if (spectrum.values[i] > spectrum.values[i - 1]) throw DomainError("spectrum must be weakly decreasing");
    const Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(spectrum.values.data(), static_cast<Eigen::Index>(n));

    SampleCloud cloud;
    cloud.seed = seed;
    cloud.generator_id = kSchurHornGenerator;
    cloud.points.resize(count);

    const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
    auto run_block = [&](std::size_t b) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        std::mt19937_64 rng(seq);
        const std::size_t end = std::min(count, (b + 1) * kSampleBlock);
        for (std::size_t i = b * kSampleBlock; i < end; ++i) cloud.points[i] = sample_diagonal(rng, lambda);
    };
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(sampling_threads(), blocks));
    if (workers <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t b = w; b < blocks; b += workers) run_block(b);
            });
        for (auto& t : pool) t.join();
    }
    return cloud;
}

ContainmentReport containment(const Polyhedron& p, const SampleCloud& cloud, double eps) {
    const Eigen::Index n = p.ambient_dim();
    std::vector<std::pair<Eigen::VectorXd, double>> ineq, eq;
    for (const auto& hs : p.h().halfspaces) {
        Eigen::VectorXd a(n);
        for (Eigen::Index i = 0; i < n; ++i) a(i) = hs.normal(i).convert_to<double>();
        ineq.emplace_back(a, to_double(hs.offset));
    }
    for (const auto& e : p.h().equalities) {
        Eigen::VectorXd a(n);
        for (Eigen::Index i = 0; i < n; ++i) a(i) = e.normal(i).convert_to<double>();
        eq.emplace_back(a, to_double(e.offset));
    }
    ContainmentReport r;
    r.total = cloud.points.size();
    for (std::size_t k = 0; k < cloud.points.size(); ++k) {
        const auto& x = cloud.points[k];
        if (x.size() != n) throw InputShapeError("containment: point of the wrong dimension");
        bool inside = true;
        for (const auto& [a, b] : ineq)
            if (a.dot(x) < b - eps * a.norm()) inside = false;
        for (const auto& [a, b] : eq)
            if (std::abs(a.dot(x) - b) > eps * a.norm()) inside = false;
        if (inside)
            ++r.contained;
        else if (!r.first_outside)
            r.first_outside = k;
    }
    return r;
}

FloatingHull floating_hull(const SampleCloud& cloud) {
    if (cloud.points.empty()) throw PreconditionError("floating_hull: empty cloud");
    const Eigen::Index n = cloud.dim();
    const Eigen::Index m = static_cast<Eigen::Index>(cloud.points.size());
    FloatingHull fh;
    fh.center = Eigen::VectorXd::Zero(n);
    for (const auto& x : cloud.points) fh.center += x;
    fh.center /= static_cast<double>(m);
    Eigen::MatrixXd centered(n, m);
    for (Eigen::Index j = 0; j < m; ++j) centered.col(j) = cloud.points[static_cast<std::size_t>(j)] - fh.center;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    Eigen::Index r = 0;
    const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
    while (r < s.size() && s(r) > 1e-9 * scale) ++r;
    fh.basis = svd.matrixU().leftCols(r);
    if (r == 0) {
        // A single point: model it as the origin of a 1-dim span.
        fh.basis = Eigen::MatrixXd::Zero(n, 1);
        fh.basis(0, 0) = 1;
        fh.hull = Polyhedron::point(qvec({0}));
        return fh;
    }
    std::vector<QVector> pts;
    pts.reserve(cloud.points.size());
    for (const auto& x : cloud.points) pts.push_back(rationalize(fh.to_span(x)));
    fh.hull = Polyhedron::from_points(r, pts);
    return fh;
}

double hull_coverage(const SampleCloud& cloud, const Polyhedron& p, std::size_t probes, std::uint64_t seed) {
    if (p.is_empty() || !p.is_bounded()) throw PreconditionError("hull_coverage: p must be a nonempty polytope");
    const FloatingHull fh = floating_hull(cloud);
    const Eigen::Index r = fh.basis.cols();

    // p's vertices in span coordinates bound the probe box.
    std::vector<Eigen::VectorXd> pv;
    for (const auto& v : p.v().vertices) pv.push_back(fh.to_span(to_double(v)));
    Eigen::VectorXd lo = pv.front(), hi = pv.front();
    for (const auto& y : pv) {
        lo = lo.cwiseMin(y);
        hi = hi.cwiseMax(y);
    }
    auto halfspaces = [](const HPolyhedron& h) {
        std::vector<std::pair<Eigen::VectorXd, double>> out;
        for (const auto& hs : h.halfspaces) {
            Eigen::VectorXd a(h.dim);
            for (Eigen::Index i = 0; i < h.dim; ++i) a(i) = hs.normal(i).convert_to<double>();
            out.emplace_back(a, to_double(hs.offset));
        }
        return out;
    };
    const auto ph = halfspaces(p.h());
    const auto hh = halfspaces(fh.hull.h());
    const double eps = 1e-12;

    std::mt19937_64 rng(seed);
    std::size_t in_p = 0, in_both = 0, attempts = 0;
    while (in_p < probes) {
        if (++attempts > 1000 * probes + 1000) throw DomainError("hull_coverage: p has no area in the cloud's span");
        Eigen::VectorXd y(r);
        for (Eigen::Index i = 0; i < r; ++i) y(i) = std::uniform_real_distribution<double>(lo(i), hi(i))(rng);
        const Eigen::VectorXd x = fh.center + fh.basis * y;
        bool inside = true;
        for (const auto& [a, b] : ph)
            if (a.dot(x) < b - eps) inside = false;
        if (!inside) continue;
        ++in_p;
        bool covered = true;
        for (const auto& [a, b] : hh)
            if (a.dot(y) < b - eps) covered = false;
        if (covered) ++in_both;
    }
    return static_cast<double>(in_both) / static_cast<double>(in_p);
}

ConvexityReport convexity_check(const SampleCloud& cloud, const ToleranceConfig& tol, std::size_t pairs) {
    const std::size_t n = cloud.points.size();
    if (n < 2) throw PreconditionError("convexity_check needs at least 2 points");
    if (!(tol.containment_eps > 0)) throw DomainError("containment_eps must be positive");
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(cloud.dim()) + 1, n - 1);

    auto spacing = [&](std::size_t i) {
        std::vector<double> d;
        d.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) d.push_back(squared_distance(cloud.points[i], cloud.points[j]));
        std::nth_element(d.begin(), d.begin() + static_cast<long>(k - 1), d.end());
        return std::sqrt(d[k - 1]);
    };

    // Sample resolution: the largest k-nearest-neighbour distance over the cloud.
    double resolution = 0;
    for (std::size_t i = 0; i < n; ++i) resolution = std::max(resolution, spacing(i));
    const double allowed = resolution + tol.containment_eps;

    ConvexityReport report;
    std::mt19937_64 rng(cloud.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < pairs; ++t) {
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        if (a == b) b = (b + 1) % n;
        const Eigen::VectorXd mid = 0.5 * (cloud.points[a] + cloud.points[b]);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& x : cloud.points) best = std::min(best, squared_distance(mid, x));
        best = std::sqrt(best);
        ++report.pairs_tested;
        if (best > allowed) report.violations.push_back({a, b, mid, best, allowed});
    }
    return report;
}

Polyhedron heckman_restriction(const Polyhedron& p, const QMatrix& inclusion) {
    if (inclusion.rows() != p.ambient_dim()) throw InputShapeError("heckman_restriction: inclusion has the wrong shape");
    if (inclusion.cols() < 1 || rank<Rational>(inclusion) != inclusion.cols())
        throw RankError("inclusion must have full column rank");
    return project(p, QMatrix(inclusion.transpose()));
}

LocalMinReport local_min_probe(const SampleCloud& cloud, const Eigen::VectorXd& xi, const ToleranceConfig& tol) {
    if (cloud.points.empty()) throw PreconditionError("local_min_probe: empty cloud");
    if (xi.size() != cloud.dim()) throw InputShapeError("local_min_probe: xi has the wrong dimension");
    LocalMinReport r;
    r.min_value = std::numeric_limits<double>::infinity();
    for (const auto& x : cloud.points) r.min_value = std::min(r.min_value, x.dot(xi));
    const double eps = tol.containment_eps * std::max(1.0, xi.norm());

    const FloatingHull fh = floating_hull(cloud);
    const QVector xr = rationalize(Eigen::VectorXd(fh.basis.transpose() * xi));
    const auto m = minimize_linear(fh.hull, xr);
    const FaceDescriptor& face = *m.argmin;
    r.face_dim = face.dim;
    r.face_id = "{";
    for (std::size_t i = 0; i < face.active_set.size(); ++i) r.face_id += (i ? "," : "") + std::to_string(face.active_set[i]);
    r.face_id += "}";

    for (const auto& x : cloud.points) {
        if (x.dot(xi) > r.min_value + eps) continue;
        ++r.minimizers;
        const Eigen::VectorXd y = fh.to_span(x);
        for (int idx : face.active_set) {
            const auto& hs = fh.hull.h().halfspaces[static_cast<std::size_t>(idx)];
            Eigen::VectorXd a(y.size());
            for (Eigen::Index i = 0; i < y.size(); ++i) a(i) = hs.normal(i).convert_to<double>();
            if (std::abs(a.dot(y) - to_double(hs.offset)) > tol.containment_eps * a.norm() + 1e-11 * a.norm())
                r.single_face = false;
        }
    }
    return r;
}

} // namespace momentcut
