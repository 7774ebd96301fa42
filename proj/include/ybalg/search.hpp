#pragma once

// Numerical exploration of the functional-equation systems: random-restart
// simplex descent over a six-parameter ansatz, followed by classification
// of converged points against the known solution families.
//
// Shapes (coloured; the one-parameter versions fix v = 1, i.e. u = x):
//   linear:      alpha = p u - p' v,  beta = q u - q' v,  gamma = r u - r' v
//                params (p, p', q, q', r, r')
//   exponential: alpha = p^u q^v,     beta = a^u b^v,     gamma = c^u d^v
//                params (p, q, a, b, c, d), all positive
//
// Every equation is cubic-homogeneous in (alpha, beta, gamma), so the zero
// set is invariant under rescaling. The objective is evaluated on a
// gauge-normalised representative: unit 2-norm for the linear shape, and
// gamma divided out (c = d = 1) for the exponential shape. This keeps the
// descent from collapsing onto the trivial point 0. Exponential triples are
// additionally rescaled per colour pair to max entry 1 inside the objective
// (each equation is linear in each triple), so alpha = beta = 0 is no longer
// reached by letting the exponents run off.

#include <array>
#include <cstdint>
#include <string_view>
#include <string>
#include <vector>

namespace ybalg {

enum class AnsatzShape { linear, exponential };
enum class SystemKind { colored, onepar };
enum class PhiShape { product, second, first };  // xz, z, x

enum class Classification {
    thm1_family,
    thm2_family,
    remark2_family,
    prop1_family,
    prop2_family,
    remark_x_family,
    degenerate,
    unclassified,
    not_converged,
};

std::string to_string(AnsatzShape s);
std::string to_string(SystemKind s);
std::string to_string(PhiShape s);
std::string to_string(Classification c);
AnsatzShape parse_shape(std::string_view s);
SystemKind parse_system(std::string_view s);
PhiShape parse_phi(std::string_view s);

using ParamVector = std::array<double, 6>;

struct SearchConfig {
    AnsatzShape shape = AnsatzShape::linear;
    SystemKind system = SystemKind::colored;
    PhiShape phi = PhiShape::product;  // one-parameter system only
    std::uint64_t seed = 42;
    int restarts = 50;
    /// Colour triples (u, v, w) for the coloured system.
    std::vector<std::array<double, 3>> colored_grid = default_colored_grid();
    /// Pairs (x, z) for the one-parameter system.
    std::vector<std::array<double, 2>> onepar_grid = default_onepar_grid();
    int max_iterations = 2000;
    double objective_tol = 1e-16;
    double size_tol = 1e-12;
    double init_range = 3.0;
    double initial_step = 0.5;
    /// Results with objective below this are classified.
    double converged_tol = 1e-8;
    /// Converged runs are polished towards this before classification.
    double polish_tol = 1e-30;
    int polish_iterations = 2000;
    /// Parameter distance for a catalogue match.
    double match_tol = 1e-6;
    unsigned threads = 1;

    static std::vector<std::array<double, 3>> default_colored_grid();
    static std::vector<std::array<double, 2>> default_onepar_grid();
};

struct SearchResult {
    int restart = 0;
    std::uint64_t seed = 0;  // per-restart seed derived from the campaign seed
    ParamVector params{};    // gauge-normalised, in the shape's own parametrisation
    double objective = 0;
    int iterations = 0;
    /// Objective on a fixed set of colours disjoint from the grid. Large
    /// values flag zeros that only exist on the sampled grid.
    double holdout_objective = 0;
    Classification classification = Classification::not_converged;
};

/// Sum over the grid of the squared equation residuals at the normalised
/// representative of `params` (shape parametrisation, not the optimiser's).
double search_objective(const SearchConfig& cfg, const ParamVector& params);

/// Gauge-normalised representative used by the objective and the classifier.
ParamVector normalize_params(AnsatzShape shape, const ParamVector& params);

/// Classifies a converged parameter vector against the catalogue.
Classification classify(const SearchConfig& cfg, const ParamVector& params);

/// Per-restart seed, a pure function of (seed, restart).
std::uint64_t restart_seed(std::uint64_t seed, int restart);

/// Runs cfg.restarts independent descents. Results come back in restart
/// order and are identical for any cfg.threads. Throws InvalidInput for an
/// empty grid, repeated colours inside a tuple, or restarts < 1.
std::vector<SearchResult> search(const SearchConfig& cfg);

}  // namespace ybalg
