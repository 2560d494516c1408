#include "qlist/stabilizer.h"

#include <fstream>
#include <sstream>

namespace qlist {

namespace {

std::string index_pair(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// Row r with r . (x|z) = omega(g, (x|z)).
BitVec omega_row(const PauliOp &g) { return g.z().concat(g.x()); }

BitVec combine(const BitMatrix &basis, const BitVec &coeffs) {
    BitVec out(basis.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        if (coeffs.get(i)) out ^= basis.row(i);
    }
    return out;
}

void check_qubits(const std::vector<PauliOp> &ops, std::size_t n, const char *what) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i].num_qubits() != n) {
            throw CodeError(std::string(what) + " " + std::to_string(i) + " acts on " +
                            std::to_string(ops[i].num_qubits()) + " qubits, expected " + std::to_string(n));
        }
    }
}

}  // namespace

StabilizerCode::StabilizerCode(std::vector<PauliOp> gens, std::size_t n, std::size_t k)
    : n_(n), k_(k), gens_(std::move(gens)), cache_(std::make_shared<LogicalCache>()) {}

StabilizerCode StabilizerCode::validate(std::vector<PauliOp> gens, std::size_t n, std::size_t k) {
    if (k > n) throw CodeError("k exceeds n");
    if (gens.size() != n - k) {
        throw CodeError("expected " + std::to_string(n - k) + " generators, got " + std::to_string(gens.size()));
    }
    check_qubits(gens, n, "generator");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (omega(gens[i], gens[j])) throw CodeError("not commuting " + index_pair(i, j));
        }
    }
    SpanBuilder span(2 * n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!span.insert(gens[i].symplectic())) throw CodeError("dependent generator " + std::to_string(i));
    }
    return StabilizerCode(std::move(gens), n, k);
}

StabilizerCode StabilizerCode::validate(
    std::vector<PauliOp> gens, std::size_t n, std::size_t k, std::vector<PauliOp> logicals) {
    StabilizerCode code = validate(std::move(gens), n, k);
    if (logicals.size() != 2 * k) {
        throw CodeError("expected " + std::to_string(2 * k) + " logical operators, got " + std::to_string(logicals.size()));
    }
    check_qubits(logicals, n, "logical");
    for (std::size_t a = 0; a < logicals.size(); ++a) {
        for (std::size_t g = 0; g < code.gens_.size(); ++g) {
            if (omega(logicals[a], code.gens_[g])) {
                throw CodeError("logical " + std::to_string(a) + " anticommutes with generator " + std::to_string(g));
            }
        }
        for (std::size_t b = a + 1; b < logicals.size(); ++b) {
            bool paired = (a % 2 == 0) && (b == a + 1);
            if (omega(logicals[a], logicals[b]) != paired) {
                throw CodeError("logical operators " + index_pair(a, b) + " violate the symplectic relations");
            }
        }
    }
    for (auto &op : logicals) op = op.hermitian();
    std::call_once(code.cache_->once, [&] { code.cache_->ops = std::move(logicals); });
    return code;
}

const std::vector<PauliOp> &StabilizerCode::logicals() const {
    std::call_once(cache_->once, [this] {
        std::vector<BitVec> constraints;
        constraints.reserve(gens_.size());
        for (const auto &g : gens_) constraints.push_back(omega_row(g));
        BitMatrix normalizer = kernel_basis(BitMatrix(std::move(constraints), 2 * n_));
        auto pairs = symplectic_pairs(normalizer.row_vectors());
        if (pairs.size() != k_) throw std::logic_error("logical basis has wrong dimension");
        std::vector<PauliOp> ops;
        ops.reserve(2 * k_);
        for (const auto &[a, b] : pairs) {
            ops.push_back(PauliOp::from_symplectic(a));
            ops.push_back(PauliOp::from_symplectic(b));
        }
        cache_->ops = std::move(ops);
    });
    return cache_->ops;
}

BitMatrix StabilizerCode::check_matrix() const {
    BitMatrix m(0, 2 * n_);
    for (const auto &g : gens_) m.append_row(g.symplectic());
    return m;
}

Syndrome syndrome(const StabilizerCode &code, const PauliOp &e) {
    if (e.num_qubits() != code.n()) throw std::invalid_argument("syndrome: error acts on the wrong number of qubits");
    BitVec bits(code.generators().size());
    for (std::size_t i = 0; i < code.generators().size(); ++i) {
        if (omega(e, code.generators()[i])) bits.set(i, true);
    }
    return Syndrome{std::move(bits)};
}

bool in_normalizer(const StabilizerCode &code, const PauliOp &p) { return syndrome(code, p).bits.none(); }

bool in_stabilizer(const StabilizerCode &code, const PauliOp &p) {
    if (!in_normalizer(code, p)) return false;
    SpanBuilder span(2 * code.n());
    for (const auto &g : code.generators()) span.insert(g.symplectic());
    return span.contains(p.symplectic());
}

BitVec logical_class(const StabilizerCode &code, const PauliOp &p) {
    if (!in_normalizer(code, p)) throw std::invalid_argument("logical_class: operator " + p.str() + " is not in N(S)");
    std::size_t k = code.k();
    BitVec cls(2 * k);
    for (std::size_t j = 0; j < k; ++j) {
        if (omega(p, code.logical_z(j))) cls.set(j, true);
        if (omega(p, code.logical_x(j))) cls.set(k + j, true);
    }
    return cls;
}

PauliOp lift_logical(const StabilizerCode &code, const BitVec &cls) {
    std::size_t k = code.k();
    if (cls.size() != 2 * k) throw std::invalid_argument("lift_logical: class has wrong length");
    PauliOp out(code.n());
    for (std::size_t j = 0; j < k; ++j) {
        if (cls.get(j)) out *= code.logical_x(j);
        if (cls.get(k + j)) out *= code.logical_z(j);
    }
    return out.hermitian();
}

std::vector<std::pair<BitVec, BitVec>> symplectic_pairs(std::vector<BitVec> pool) {
    std::vector<std::pair<BitVec, BitVec>> pairs;
    std::size_t head = 0;
    while (head < pool.size()) {
        BitVec a = pool[head++];
        std::size_t partner = head;
        while (partner < pool.size() && !symplectic_form(a, pool[partner])) ++partner;
        if (partner == pool.size()) continue;  // a is in the radical
        BitVec b = pool[partner];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
        for (std::size_t i = head; i < pool.size(); ++i) {
            bool with_b = symplectic_form(pool[i], b);
            bool with_a = symplectic_form(pool[i], a);
            if (with_b) pool[i] ^= a;
            if (with_a) pool[i] ^= b;
        }
        pairs.emplace_back(std::move(a), std::move(b));
    }
    return pairs;
}

StabilizerCode random_code(std::size_t n, std::size_t k, Rng &rng) {
    if (k > n) throw std::invalid_argument("random_code: k exceeds n");
    std::vector<PauliOp> gens;
    std::vector<BitVec> constraints;
    SpanBuilder span(2 * n);
    while (gens.size() < n - k) {
        BitMatrix commutant = kernel_basis(BitMatrix(constraints, 2 * n));
        BitVec candidate;
        do {
            candidate = combine(commutant, random_bits(rng, commutant.rows()));
        } while (span.contains(candidate));
        span.insert(candidate);
        PauliOp g = PauliOp::from_symplectic(candidate);
        constraints.push_back(omega_row(g));
        gens.push_back(std::move(g));
    }
    return StabilizerCode::validate(std::move(gens), n, k);
}

std::string write_code(const StabilizerCode &code, bool include_logicals) {
    std::ostringstream out;
    out << code.n() << ' ' << code.k() << '\n';
    for (const auto &g : code.generators()) out << g.str() << '\n';
    if (include_logicals) {
        for (const auto &l : code.logicals()) out << l.str() << '\n';
    }
    return out.str();
}

StabilizerCode read_code(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    if (lines.empty()) throw CodeError("code file is empty");
    std::istringstream header(lines[0]);
    long long n = -1;
    long long k = -1;
    if (!(header >> n >> k) || n < 0 || k < 0 || k > n) throw CodeError("bad code header '" + lines[0] + "'");
    std::size_t r = static_cast<std::size_t>(n - k);
    std::size_t body = lines.size() - 1;
    if (body != r && body != r + 2 * static_cast<std::size_t>(k)) {
        throw CodeError("code file has " + std::to_string(body) + " operator lines, expected " + std::to_string(r) +
                        " or " + std::to_string(r + 2 * k));
    }
    std::vector<PauliOp> gens;
    std::vector<PauliOp> logicals;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        PauliOp p = PauliOp::from_string(lines[i]);
        (i <= r ? gens : logicals).push_back(std::move(p));
    }
    if (body == r) return StabilizerCode::validate(std::move(gens), n, k);
    return StabilizerCode::validate(std::move(gens), n, k, std::move(logicals));
}

StabilizerCode load_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return read_code(buffer.str());
}

StabilizerCode five_qubit_code() {
    std::vector<PauliOp> gens;
    for (const char *s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) gens.push_back(PauliOp::from_string(s));
    return StabilizerCode::validate(std::move(gens), 5, 1);
}

}  // namespace qlist
