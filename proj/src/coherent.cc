#include "qlist/coherent.h"

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qlist {

namespace {

constexpr double kCompletenessTolerance = 1e-9;
constexpr double kZeroProbability = 1e-12;

const Amplitude kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_qubits(std::size_t n) {
    if (n > kMaxStateQubits) {
        throw std::domain_error("statevector limited to " + std::to_string(kMaxStateQubits) + " qubits (got " +
                                std::to_string(n) + ")");
    }
}

void require_same(const StateVec &a, const StateVec &b) {
    if (a.n != b.n) throw std::invalid_argument("statevector qubit counts differ");
}

// (I + sign * P) / 2 applied to s.
StateVec half_projection(const PauliOp &p, const StateVec &s, bool minus) {
    StateVec out = apply_pauli(p, s);
    if (minus) out *= -1.0;
    out += s;
    out *= 0.5;
    return out;
}

}  // namespace

StateVec::StateVec(std::size_t qubits) : n(qubits) {
    require_qubits(qubits);
    amp.assign(std::size_t{1} << qubits, Amplitude{});
}

StateVec StateVec::basis(std::size_t qubits, std::uint64_t index) {
    StateVec s(qubits);
    if (index >= s.amp.size()) throw std::out_of_range("basis index out of range");
    s.amp[index] = 1.0;
    return s;
}

StateVec StateVec::random(std::size_t qubits, Rng &rng) {
    StateVec s(qubits);
    std::normal_distribution<double> gauss;
    for (auto &a : s.amp) a = Amplitude(gauss(rng), gauss(rng));
    s.normalize();
    return s;
}

double StateVec::norm2() const {
    double total = 0;
    for (const auto &a : amp) total += std::norm(a);
    return total;
}

void StateVec::normalize() {
    double norm = std::sqrt(norm2());
    if (norm == 0) throw std::domain_error("cannot normalize the zero vector");
    *this *= 1.0 / norm;
}

StateVec &StateVec::operator+=(const StateVec &other) {
    require_same(*this, other);
    for (std::size_t i = 0; i < amp.size(); ++i) amp[i] += other.amp[i];
    return *this;
}

StateVec &StateVec::operator*=(Amplitude c) {
    for (auto &a : amp) a *= c;
    return *this;
}

Amplitude inner(const StateVec &a, const StateVec &b) {
    require_same(a, b);
    Amplitude total{};
    for (std::size_t i = 0; i < a.amp.size(); ++i) total += std::conj(a.amp[i]) * b.amp[i];
    return total;
}

double fidelity(const StateVec &a, const StateVec &b) { return std::norm(inner(a, b)); }

StateVec apply_pauli(const PauliOp &p, const StateVec &s) {
    if (p.num_qubits() != s.n) throw std::invalid_argument("Pauli and state qubit counts differ");
    std::uint64_t u = p.x().to_uint();
    std::uint64_t v = p.z().to_uint();
    Amplitude phase = kIPowers[p.phase() & 3];
    StateVec out(s.n);
    for (std::uint64_t b = 0; b < s.amp.size(); ++b) {
        Amplitude a = s.amp[b] * phase;
        out.amp[b ^ u] = (std::popcount(v & b) & 1) ? -a : a;
    }
    return out;
}

StateVec apply_pauli_sum(const PauliSum &op, const StateVec &s) {
    StateVec out(s.n);
    for (const auto &[c, p] : op) {
        StateVec term = apply_pauli(p, s);
        term *= c;
        out += term;
    }
    return out;
}

double completeness_error(const std::vector<PauliSum> &ops) {
    std::map<BitVec, Amplitude> total;
    std::size_t n = 0;
    for (const auto &op : ops) {
        for (const auto &[ce, e] : op) {
            n = e.num_qubits();
            PauliOp ed = e.dagger();
            for (const auto &[cf, f] : op) {
                PauliOp prod = ed * f;
                total[prod.symplectic()] += std::conj(ce) * cf * kIPowers[prod.phase() & 3];
            }
        }
    }
    BitVec identity(2 * n);
    double worst = std::abs(total[identity] - 1.0);
    for (const auto &[key, c] : total) {
        if (key != identity) worst = std::max(worst, std::abs(c));
    }
    return worst;
}

KrausSet KrausSet::make(std::vector<PauliSum> ops) {
    if (ops.empty()) throw std::invalid_argument("Kraus set has no operators");
    std::size_t n = 0;
    bool first = true;
    for (const auto &op : ops) {
        if (op.empty()) throw std::invalid_argument("Kraus operator with no terms");
        for (const auto &term : op) {
            if (first) n = term.second.num_qubits();
            first = false;
            if (term.second.num_qubits() != n) throw std::invalid_argument("Kraus terms act on different qubit counts");
        }
    }
    double err = completeness_error(ops);
    if (err > kCompletenessTolerance) {
        throw std::domain_error("Kraus set is not complete (deviation " + std::to_string(err) + ")");
    }
    return KrausSet(std::move(ops), n);
}

KrausSet KrausSet::single(const PauliOp &e) { return make({PauliSum{{Amplitude(1.0), e}}}); }

std::size_t KrausSet::max_weight() const {
    std::size_t w = 0;
    for (const auto &op : ops_) {
        for (const auto &term : op) w = std::max(w, term.second.weight());
    }
    return w;
}

KrausSet read_kraus(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<PauliSum> ops;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#') continue;
        if (first == "kraus") {
            ops.emplace_back();
            continue;
        }
        double re = 0;
        double im = 0;
        std::string pauli;
        try {
            re = std::stod(first);
        } catch (const std::exception &) {
            throw std::invalid_argument("kraus line " + std::to_string(line_no) + ": bad coefficient");
        }
        if (!(fields >> im >> pauli)) throw std::invalid_argument("kraus line " + std::to_string(line_no) + ": expected 're im pauli'");
        if (ops.empty()) throw std::invalid_argument("kraus line " + std::to_string(line_no) + ": term before 'kraus'");
        ops.back().emplace_back(Amplitude(re, im), PauliOp::from_string(pauli));
    }
    return KrausSet::make(std::move(ops));
}

std::string write_kraus(const KrausSet &ks) {
    std::ostringstream out;
    out.precision(17);
    for (const auto &op : ks.ops()) {
        out << "kraus\n";
        for (const auto &[c, p] : op) out << c.real() << ' ' << c.imag() << ' ' << p.str() << '\n';
    }
    return out.str();
}

Encoder::Encoder(const StabilizerCode &code) : code_(code) {
    std::size_t n = code.n();
    require_qubits(n);
    StateVec zero;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        StateVec s = StateVec::basis(n, b);
        for (const auto &g : code.generators()) s = half_projection(g, s, false);
        for (std::size_t j = 0; j < code.k(); ++j) s = half_projection(code.logical_z(j), s, false);
        if (s.norm2() > 1e-9) {
            zero = std::move(s);
            break;
        }
    }
    if (zero.n != n) throw std::logic_error("code space projection vanished on every basis state");
    zero.normalize();
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << code.k()); ++j) {
        StateVec s = zero;
        for (std::size_t i = 0; i < code.k(); ++i) {
            if ((j >> i) & 1) s = apply_pauli(code.logical_x(i), s);
        }
        basis_.push_back(std::move(s));
    }
}

StateVec Encoder::encode(const StateVec &logical) const {
    if (logical.n != code_.k()) throw std::invalid_argument("logical state must have k qubits");
    StateVec out(code_.n());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        StateVec term = basis_[j];
        term *= logical.amp[j];
        out += term;
    }
    return out;
}

StateVec Encoder::decode(const StateVec &state) const {
    StateVec out(code_.k());
    for (std::size_t j = 0; j < basis_.size(); ++j) out.amp[j] = inner(basis_[j], state);
    return out;
}

StateVec encode(const StabilizerCode &code, const StateVec &logical) { return Encoder(code).encode(logical); }

Branch apply_kraus(const StateVec &state, const KrausSet &ks, Rng &rng) {
    if (ks.num_qubits() != state.n) throw std::invalid_argument("Kraus set and state qubit counts differ");
    std::vector<StateVec> branches;
    std::vector<double> weights;
    double total = 0;
    for (const auto &op : ks.ops()) {
        branches.push_back(apply_pauli_sum(op, state));
        weights.push_back(branches.back().norm2());
        total += weights.back();
    }
    double u = uniform_unit(rng) * total;
    std::size_t pick = 0;
    double acc = weights[0];
    while (pick + 1 < weights.size() && u >= acc) acc += weights[++pick];
    // u can land exactly on a boundary next to an empty branch.
    if (weights[pick] <= kZeroProbability) {
        pick = 0;
        while (weights[pick] <= kZeroProbability) ++pick;
    }
    Branch out{std::move(branches[pick]), pick, weights[pick] / total};
    out.state.normalize();
    return out;
}

Measurement measure_syndrome(const StateVec &state, const KeyedCode &kc, Rng &rng) {
    const auto &gens = kc.base().generators();
    Measurement m{FullSyndrome{Syndrome{BitVec(gens.size())}, BitVec(kc.extra_count())}, state};
    std::size_t total = gens.size() + kc.extra_count();
    for (std::size_t i = 0; i < total; ++i) {
        const PauliOp &g = i < gens.size() ? gens[i] : kc.extra()[i - gens.size()];
        double before = m.state.norm2();
        StateVec plus = half_projection(g, m.state, false);
        double p0 = std::clamp(plus.norm2() / before, 0.0, 1.0);
        bool outcome = uniform_unit(rng) >= p0;
        StateVec next = outcome ? half_projection(g, m.state, true) : std::move(plus);
        if (next.norm2() / before <= kZeroProbability) {
            throw std::runtime_error("syndrome measurement selected a zero-probability outcome");
        }
        next.normalize();
        m.state = std::move(next);
        if (outcome) {
            if (i < gens.size()) {
                m.syndrome.public_bits.bits.set(i, true);
            } else {
                m.syndrome.secret_bits.set(i - gens.size(), true);
            }
        }
    }
    return m;
}

CoherentOutcome end_to_end(const KeyedCode &kc, const ListTable &table, const KrausSet &ks, const StateVec &logical,
                           Rng &rng) {
    return end_to_end(kc, Encoder(kc.as_code()), table, ks, logical, rng);
}

CoherentOutcome end_to_end(const KeyedCode &kc, const Encoder &encoder, const ListTable &table, const KrausSet &ks,
                           const StateVec &logical, Rng &rng) {
    if (ks.max_weight() > table.t) throw std::domain_error("Kraus set contains Paulis above the weight cap");
    StateVec encoded = encoder.encode(logical);
    Branch branch = apply_kraus(encoded, ks, rng);
    Measurement m = measure_syndrome(branch.state, kc, rng);
    DecodeResult decoded = decode(kc, table, m.syndrome);
    StateVec corrected = m.state;
    if (decoded.status == DecodeStatus::kUnique) {
        corrected = apply_pauli(decoded.correction, m.state);
    } else if (decoded.status == DecodeStatus::kAmbiguous) {
        corrected = apply_pauli(table.entries.at(m.syndrome.public_bits).rep, m.state);
    }
    CoherentOutcome out;
    out.fidelity = fidelity(logical, encoder.decode(corrected));
    out.status = decoded.status;
    out.branch = branch.index;
    out.syndrome = std::move(m.syndrome);
    return out;
}

}  // namespace qlist
