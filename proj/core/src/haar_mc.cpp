#include "typicality/haar_mc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "typicality/special_functions.hpp"

namespace typicality {

namespace {

void check_dims(const SubsystemDims& dims) {
    if (dims.d_s < 2) throw std::domain_error("SubsystemDims: d_s must be >= 2");
    if (dims.d_e < 1) throw std::domain_error("SubsystemDims: d_e must be >= 1");
    if (dims.n() > 1 << 20) throw std::domain_error("SubsystemDims: N too large for sampling");
}

double entropy_term(double lambda) {
    return lambda <= 1e-15 ? 0.0 : -lambda * std::log(lambda);
}

}  // namespace

void EnsembleStats::merge(const EnsembleStats& other) {
    if (other.count == 0) return;
    if (count == 0 && pk.empty()) {
        *this = other;
        return;
    }
    if (pk.size() != other.pk.size() || bloch_sq.size() != other.bloch_sq.size()) {
        throw std::invalid_argument("EnsembleStats::merge: shape mismatch");
    }
    count += other.count;
    for (std::size_t k = 0; k < pk.size(); ++k) pk[k].merge(other.pk[k]);
    purity.merge(other.purity);
    von_neumann.merge(other.von_neumann);
    diagonal_entropy.merge(other.diagonal_entropy);
    plogp.merge(other.plogp);
    cross_moment.merge(other.cross_moment);
    for (std::size_t a = 0; a < bloch_sq.size(); ++a) bloch_sq[a].merge(other.bloch_sq[a]);
    for (int b = 0; b < kP1Bins; ++b) p1_histogram[b] += other.p1_histogram[b];
    for (double p1 : other.p1_samples) {
        if (p1_samples.size() >= kP1ReservoirCap) break;
        p1_samples.push_back(p1);
    }
    majorization_violations += other.majorization_violations;
}

PureState sample_state(const SubsystemDims& dims, CounterRng& rng) {
    check_dims(dims);
    const long long n = dims.n();
    PureState state;
    state.dims = dims;
    state.coefficients.resize(n);
    double norm_sq = 0.0;
    for (long long i = 0; i < n; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        state.coefficients[i] = {re, im};
        norm_sq += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& c : state.coefficients) c *= inv;
    return state;
}

ReducedDensity partial_trace(const PureState& state) {
    const int ds = state.dims.d_s, de = state.dims.d_e;
    if (static_cast<long long>(state.coefficients.size()) != state.dims.n()) {
        throw std::invalid_argument("partial_trace: coefficient count does not match dims");
    }
    ReducedDensity out;
    out.dims = state.dims;
    out.rho = CMatrix(ds, ds);
    for (int k = 0; k < ds; ++k) {
        for (int l = k; l < ds; ++l) {
            std::complex<double> acc = 0.0;
            for (int j = 0; j < de; ++j) {
                acc += state.coefficients[static_cast<std::size_t>(k) * de + j] *
                       std::conj(state.coefficients[static_cast<std::size_t>(l) * de + j]);
            }
            out.rho(k, l) = acc;
            if (l != k) out.rho(l, k) = std::conj(acc);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ReducedDensity& rho) {
    return hermitian_eigenvalues(rho.rho);
}

EntropyRecord entropies(const ReducedDensity& rho) {
    const std::vector<double> eig = hermitian_eigenvalues(rho.rho);
    EntropyRecord out;
    for (double lambda : eig) out.von_neumann += entropy_term(lambda);
    for (int k = 0; k < rho.rho.rows(); ++k) out.diagonal += entropy_term(rho.rho(k, k).real());
    for (int k = 0; k < rho.rho.rows(); ++k) {
        for (int l = 0; l < rho.rho.cols(); ++l) out.purity += std::norm(rho.rho(k, l));
    }
    return out;
}

GellMannBasis gellmann_basis(int d) {
    if (d < 2) throw std::domain_error("gellmann_basis: d must be >= 2");
    GellMannBasis basis;
    basis.d = d;
    // Diagonal family: sqrt(2/(m(m+1))) diag(1,...,1,-m,0,...), m = 1..d-1.
    for (int m = 1; m < d; ++m) {
        CMatrix g(d, d);
        const double w = std::sqrt(2.0 / (static_cast<double>(m) * (m + 1)));
        for (int i = 0; i < m; ++i) g(i, i) = w;
        g(m, m) = -w * m;
        basis.cartan.push_back(std::move(g));
    }
    // Off-diagonal pairs in lexicographic (k,l) order.
    for (int k = 0; k < d - 1; ++k) {
        for (int l = k + 1; l < d; ++l) {
            CMatrix sym(d, d);
            sym(k, l) = 1.0;
            sym(l, k) = 1.0;
            basis.offdiag.push_back(std::move(sym));
            CMatrix asym(d, d);
            asym(k, l) = std::complex<double>(0.0, -1.0);
            asym(l, k) = std::complex<double>(0.0, 1.0);
            basis.offdiag.push_back(std::move(asym));
        }
    }
    return basis;
}

std::vector<double> bloch_components(const ReducedDensity& rho, const GellMannBasis& basis) {
    if (rho.rho.rows() != basis.d) {
        throw std::invalid_argument("bloch_components: basis dimension mismatch");
    }
    std::vector<double> out;
    out.reserve(basis.total_count());
    auto component = [&rho](const CMatrix& g) {
        std::complex<double> tr = 0.0;
        for (int i = 0; i < g.rows(); ++i) {
            for (int j = 0; j < g.cols(); ++j) tr += rho.rho(i, j) * g(j, i);
        }
        if (std::fabs(tr.imag()) > 1e-12) {
            throw std::runtime_error("bloch_components: imaginary residue above 1e-12");
        }
        return tr.real();
    };
    for (const CMatrix& g : basis.cartan) out.push_back(component(g));
    for (const CMatrix& g : basis.offdiag) out.push_back(component(g));
    return out;
}

namespace {

EnsembleStats make_empty_stats(const SubsystemDims& dims) {
    EnsembleStats stats;
    stats.dims = dims;
    stats.pk.resize(dims.d_s);
    stats.bloch_sq.resize(static_cast<std::size_t>(dims.d_s) * dims.d_s - 1);
    return stats;
}

EnsembleStats accumulate_block(const SubsystemDims& dims, const GellMannBasis& basis,
                               std::uint64_t seed, std::uint64_t first, std::uint64_t n_samples) {
    EnsembleStats stats = make_empty_stats(dims);
    const int cross_col = dims.d_e > 1 ? 1 : 0;
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        CounterRng rng(seed, first + s);
        const PureState psi = sample_state(dims, rng);
        const ReducedDensity rho = partial_trace(psi);
        const EntropyRecord ent = entropies(rho);

        double plogp_sum = 0.0;
        for (int k = 0; k < dims.d_s; ++k) {
            const double p = rho.rho(k, k).real();
            stats.pk[k].add(p);
            if (p > 1e-15) plogp_sum += p * std::log(p);
        }
        stats.purity.add(ent.purity);
        stats.von_neumann.add(ent.von_neumann);
        stats.diagonal_entropy.add(ent.diagonal);
        stats.plogp.add(plogp_sum / dims.d_s);
        stats.cross_moment.add(std::norm(psi.coefficients[0]) *
                               std::norm(psi.coefficients[static_cast<std::size_t>(dims.d_e) +
                                                          cross_col]));
        const std::vector<double> r = bloch_components(rho, basis);
        for (std::size_t a = 0; a < r.size(); ++a) stats.bloch_sq[a].add(r[a] * r[a]);

        const double p1 = rho.rho(0, 0).real();
        const int bin = std::min(kP1Bins - 1, std::max(0, static_cast<int>(p1 * kP1Bins)));
        ++stats.p1_histogram[bin];
        if (stats.p1_samples.size() < kP1ReservoirCap) stats.p1_samples.push_back(p1);
        if (ent.von_neumann > ent.diagonal + 1e-9) ++stats.majorization_violations;
        ++stats.count;
    }
    return stats;
}

// Runs fn(block_index) over blocks 0..n_blocks-1 on `workers` threads.
template <typename Fn>
void run_blocks(std::uint64_t n_blocks, int workers, Fn&& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || n_blocks <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::uint64_t b = w; b < n_blocks; b += workers) fn(b);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

EnsembleStats run_ensemble(const SubsystemDims& dims, std::uint64_t samples, std::uint64_t seed,
                           int workers) {
    check_dims(dims);
    if (samples == 0) throw std::domain_error("run_ensemble: samples must be > 0");
    const GellMannBasis basis = gellmann_basis(dims.d_s);
    const std::uint64_t n_blocks = (samples + kEnsembleBlock - 1) / kEnsembleBlock;
    std::vector<EnsembleStats> blocks(n_blocks);
    run_blocks(n_blocks, workers, [&](std::uint64_t b) {
        const std::uint64_t first = b * kEnsembleBlock;
        const std::uint64_t n_here = std::min(kEnsembleBlock, samples - first);
        blocks[b] = accumulate_block(dims, basis, seed, first, n_here);
    });
    EnsembleStats total = make_empty_stats(dims);
    for (const EnsembleStats& b : blocks) total.merge(b);
    return total;
}

namespace {

double subsystem_entropy(const std::vector<double>& eig) {
    double s = 0.0;
    for (double lambda : eig) s += entropy_term(lambda);
    return s;
}

// Reduction over the middle factor of an (a,b,e) product state.
CMatrix reduce_middle(const std::vector<std::complex<double>>& c, int da, int db, int de) {
    CMatrix rho(db, db);
    for (int b = 0; b < db; ++b) {
        for (int b2 = b; b2 < db; ++b2) {
            std::complex<double> acc = 0.0;
            for (int a = 0; a < da; ++a) {
                const std::size_t base = (static_cast<std::size_t>(a) * db) * de;
                for (int e = 0; e < de; ++e) {
                    acc += c[base + static_cast<std::size_t>(b) * de + e] *
                           std::conj(c[base + static_cast<std::size_t>(b2) * de + e]);
                }
            }
            rho(b, b2) = acc;
            if (b2 != b) rho(b2, b) = std::conj(acc);
        }
    }
    return rho;
}

}  // namespace

MiEnsembleResult mi_ensemble(const TripartiteDims& dims, std::uint64_t samples,
                             std::uint64_t seed, int workers) {
    if (dims.d_a < 1 || dims.d_b < 1 || dims.d_e < 1) {
        throw std::domain_error("TripartiteDims: dimensions must be >= 1");
    }
    if (samples == 0) throw std::domain_error("mi_ensemble: samples must be > 0");
    const int da = dims.d_a, db = dims.d_b, de = dims.d_e;
    // Sampling reuses the bipartite pipeline with the AB block as subsystem.
    const SubsystemDims ab_split{da * db, de};
    if (ab_split.d_s < 2) {
        // d_a == d_b == 1: I is identically zero.
        MiEnsembleResult trivial;
        trivial.dims = dims;
        trivial.count = samples;
        for (std::uint64_t s = 0; s < samples; ++s) trivial.mi.add(0.0);
        return trivial;
    }

    const std::uint64_t n_blocks = (samples + kEnsembleBlock - 1) / kEnsembleBlock;
    std::vector<StreamingMoments> blocks(n_blocks);
    run_blocks(n_blocks, workers, [&](std::uint64_t block) {
        const std::uint64_t first = block * kEnsembleBlock;
        const std::uint64_t n_here = std::min(kEnsembleBlock, samples - first);
        StreamingMoments acc;
        for (std::uint64_t s = 0; s < n_here; ++s) {
            CounterRng rng(seed, first + s);
            const PureState psi = sample_state(ab_split, rng);
            // rho_A: trace over (B,E); rho_AB: trace over E; rho_B: middle.
            const PureState as_a{{da, db * de}, psi.coefficients};
            const double s_a = da > 1 ? subsystem_entropy(hermitian_eigenvalues(partial_trace(as_a).rho)) : 0.0;
            const double s_b =
                db > 1 ? subsystem_entropy(hermitian_eigenvalues(reduce_middle(psi.coefficients, da, db, de)))
                       : 0.0;
            const double s_ab = subsystem_entropy(hermitian_eigenvalues(partial_trace(psi).rho));
            acc.add((s_a + s_b) - s_ab);
        }
        blocks[block] = acc;
    });
    MiEnsembleResult out;
    out.dims = dims;
    for (const StreamingMoments& b : blocks) out.mi.merge(b);
    out.count = out.mi.n;
    return out;
}

double ks_statistic(const EnsembleStats& stats, const SubsystemDims& dims) {
    check_dims(dims);
    if (stats.count < 1000) {
        throw std::invalid_argument("ks_statistic: need at least 1000 samples");
    }
    const BetaLaw law = pk_law(dims);
    if (stats.p1_samples.size() == stats.count) {
        std::vector<double> sorted = stats.p1_samples;
        std::sort(sorted.begin(), sorted.end());
        const double n = static_cast<double>(sorted.size());
        double d_max = 0.0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const double cdf = reg_incomplete_beta(sorted[i], law.alpha, law.beta);
            const double hi = (static_cast<double>(i) + 1.0) / n - cdf;
            const double lo = cdf - static_cast<double>(i) / n;
            d_max = std::max(d_max, std::max(hi, lo));
        }
        return d_max;
    }
    // Histogram fallback: exact at bin edges; the within-bin deviation is
    // bounded by the largest single-bin CDF mass, added conservatively.
    const double n = static_cast<double>(stats.count);
    double d_max = 0.0;
    double max_bin_mass = 0.0;
    double cum = 0.0;
    double cdf_left = 0.0;
    for (int b = 0; b < kP1Bins; ++b) {
        cum += static_cast<double>(stats.p1_histogram[b]);
        const double edge = static_cast<double>(b + 1) / kP1Bins;
        const double cdf_right = reg_incomplete_beta(std::min(edge, 1.0), law.alpha, law.beta);
        d_max = std::max(d_max, std::fabs(cum / n - cdf_right));
        max_bin_mass = std::max(max_bin_mass, cdf_right - cdf_left);
        cdf_left = cdf_right;
    }
    return d_max + max_bin_mass;
}

}  // namespace typicality
