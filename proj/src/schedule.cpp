#include "maqw/schedule.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "maqw/linalg.hpp"
#include "maqw/operators.hpp"

namespace maqw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_hypercube_edge(const BetaLayer::Edge& edge, std::size_t dim) {
    const auto [u, w] = edge;
    if (u >= dim || w >= dim) {
        std::ostringstream msg;
        msg << "edge (" << u << ", " << w << ") out of range for " << dim << " vertices";
        throw std::invalid_argument(msg.str());
    }
    if (u == w || std::popcount(u ^ w) != 1) {
        std::ostringstream msg;
        msg << "edge (" << u << ", " << w << ") is not a hypercube edge: endpoints differ in "
            << std::popcount(u ^ w) << " bits";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

double normalize_angle(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

GammaLayer::GammaLayer(int num_qubits, std::vector<double> angles)
    : num_qubits_(check_qubit_count(num_qubits)), angles_(std::move(angles)) {
    if (angles_.size() != (std::size_t{1} << num_qubits_)) {
        std::ostringstream msg;
        msg << "gamma layer has " << angles_.size() << " angles, expected "
            << (std::size_t{1} << num_qubits_);
        throw std::invalid_argument(msg.str());
    }
    for (auto& a : angles_) a = normalize_angle(a);
}

GammaLayer GammaLayer::zero(int num_qubits) {
    check_qubit_count(num_qubits);
    return GammaLayer(num_qubits, std::vector<double>(std::size_t{1} << num_qubits, 0.0));
}

bool GammaLayer::is_zero() const {
    for (double a : angles_)
        if (a != 0.0) return false;
    return true;
}

BetaLayer::BetaLayer(int num_qubits, const EdgeAngles& edge_angles)
    : num_qubits_(check_qubit_count(num_qubits)) {
    const std::size_t dim = std::size_t{1} << num_qubits_;
    for (const auto& [edge, angle] : edge_angles) {
        const Edge key{std::min(edge.first, edge.second), std::max(edge.first, edge.second)};
        check_hypercube_edge(key, dim);
        if (!edge_angles_.emplace(key, normalize_angle(angle)).second) {
            std::ostringstream msg;
            msg << "duplicate edge (" << key.first << ", " << key.second << ")";
            throw std::invalid_argument(msg.str());
        }
    }
}

BetaLayer BetaLayer::zero(int num_qubits) { return BetaLayer(num_qubits, {}); }

bool BetaLayer::is_zero() const {
    for (const auto& [edge, angle] : edge_angles_)
        if (angle != 0.0) return false;
    return true;
}

std::vector<std::pair<BetaLayer::Edge, double>> full_edge_angle_vector(const BetaLayer& layer) {
    const std::size_t dim = std::size_t{1} << layer.num_qubits();
    std::vector<std::pair<BetaLayer::Edge, double>> out;
    out.reserve(static_cast<std::size_t>(layer.num_qubits()) * dim / 2);
    for (std::size_t u = 0; u < dim; ++u) {
        for (std::size_t mask = 1; mask < dim; mask <<= 1) {
            const std::size_t w = u ^ mask;
            if (w <= u) continue;
            const auto it = layer.edge_angles().find({u, w});
            out.emplace_back(BetaLayer::Edge{u, w},
                             it == layer.edge_angles().end() ? 0.0 : it->second);
        }
    }
    return out;
}

Schedule::Schedule(int num_qubits, std::vector<Layer> layers)
    : num_qubits_(check_qubit_count(num_qubits)), layers_(std::move(layers)) {
    if (layers_.empty()) throw std::invalid_argument("schedule must contain at least one layer");
    for (const auto& [gamma, beta] : layers_) {
        if (gamma.num_qubits() != num_qubits_ || beta.num_qubits() != num_qubits_)
            throw std::invalid_argument("schedule layers disagree on register size");
    }
}

ComplexMatrix gamma_unitary(const GammaLayer& layer) {
    std::vector<cx> diag;
    diag.reserve(layer.angles().size());
    for (double a : layer.angles()) diag.push_back(std::polar(1.0, -a));
    return ComplexMatrix::diagonal(diag);
}

ComplexMatrix beta_hamiltonian(const BetaLayer& layer) {
    ComplexMatrix w(std::size_t{1} << layer.num_qubits());
    for (const auto& [edge, angle] : layer.edge_angles()) {
        w(edge.first, edge.second) = angle;
        w(edge.second, edge.first) = angle;
    }
    return w;
}

ComplexMatrix beta_unitary(const BetaLayer& layer, const Tolerances& tol) {
    return herm_exp(beta_hamiltonian(layer), 1.0, tol);
}

ComplexMatrix beta_unitary_product(const BetaLayer& layer) {
    const std::size_t dim = std::size_t{1} << layer.num_qubits();
    ComplexMatrix u = ComplexMatrix::identity(dim);
    for (const auto& [edge, angle] : layer.edge_angles()) {
        ComplexMatrix factor = ComplexMatrix::identity(dim);
        factor(edge.first, edge.first) = std::cos(angle);
        factor(edge.second, edge.second) = std::cos(angle);
        factor(edge.first, edge.second) = cx{0.0, -std::sin(angle)};
        factor(edge.second, edge.first) = cx{0.0, -std::sin(angle)};
        u = factor * u;
    }
    return u;
}

double beta_form_gap(const BetaLayer& layer) {
    return frobenius_distance(beta_unitary(layer), beta_unitary_product(layer));
}

BetaLayer summand_to_edge_angles(const std::vector<std::pair<PauliString, double>>& per_summand,
                                 int num_qubits) {
    check_qubit_count(num_qubits);
    const auto known = b_operator_summands(num_qubits);

    ComplexMatrix weighted(std::size_t{1} << num_qubits);
    for (const auto& [summand, angle] : per_summand) {
        bool found = false;
        for (const auto& term : known) {
            if (term.pauli == summand) {
                found = true;
                break;
            }
        }
        if (!found) {
            std::ostringstream msg;
            msg << "unknown B summand " << summand.label();
            throw std::invalid_argument(msg.str());
        }
        weighted += cx{angle, 0.0} * pauli_matrix(summand);
    }

    BetaLayer::EdgeAngles angles;
    const std::size_t dim = weighted.dim();
    for (std::size_t r = 0; r < dim; ++r) {
        if (std::abs(weighted(r, r)) > 1e-12)
            throw std::invalid_argument("summand combination has a nonzero diagonal");
        for (std::size_t c = r + 1; c < dim; ++c) {
            const cx entry = weighted(r, c);
            if (entry == cx{0.0, 0.0}) continue;
            if (std::popcount(r ^ c) != 1) {
                std::ostringstream msg;
                msg << "summand combination has weight off the hypercube at (" << r << ", " << c
                    << ")";
                throw std::invalid_argument(msg.str());
            }
            angles[{r, c}] = entry.real();
        }
    }
    return BetaLayer(num_qubits, angles);
}

ScheduleRun run_schedule(const Schedule& schedule, const Statevector& initial) {
    if (initial.num_qubits() != schedule.num_qubits())
        throw std::invalid_argument("initial state does not match schedule register");

    std::vector<cx> amps = initial.amplitudes();
    ScheduleRun run{initial, {}};
    run.after_half_layer.reserve(2 * schedule.layers().size());

    for (const auto& [gamma, beta] : schedule.layers()) {
        const auto& angles = gamma.angles();
        for (std::size_t z = 0; z < amps.size(); ++z) amps[z] *= std::polar(1.0, -angles[z]);
        run.after_half_layer.emplace_back(schedule.num_qubits(), amps);

        amps = mat_vec(beta_unitary(beta), amps);
        run.after_half_layer.emplace_back(schedule.num_qubits(), amps);
    }
    run.final_state = run.after_half_layer.back();
    return run;
}

ComplexMatrix schedule_unitary(const Schedule& schedule) {
    ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << schedule.num_qubits());
    for (const auto& [gamma, beta] : schedule.layers()) {
        u = gamma_unitary(gamma) * u;
        u = beta_unitary(beta) * u;
    }
    return u;
}

Schedule merge_gamma_layers(const Schedule& schedule) {
    const std::size_t dim = std::size_t{1} << schedule.num_qubits();
    std::vector<Schedule::Layer> merged;
    std::vector<double> pending(dim, 0.0);
    bool have_pending = false;

    const auto& layers = schedule.layers();
    for (std::size_t i = 0; i < layers.size(); ++i) {
        std::vector<double> combined = layers[i].first.angles();
        if (have_pending) {
            for (std::size_t z = 0; z < dim; ++z)
                combined[z] = normalize_angle(combined[z] + pending[z]);
            have_pending = false;
        }
        const bool last = (i + 1 == layers.size());
        if (layers[i].second.is_zero() && !last) {
            pending = std::move(combined);
            have_pending = true;
            continue;
        }
        merged.emplace_back(GammaLayer(schedule.num_qubits(), std::move(combined)),
                            layers[i].second);
    }
    return Schedule(schedule.num_qubits(), std::move(merged));
}

}  // namespace maqw
