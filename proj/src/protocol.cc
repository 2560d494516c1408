#include "qlist/protocol.h"

#include <bit>
#include <stdexcept>

#include "qlist/bounds.h"
#include "qlist/parallel.h"
#include "qlist/rng.h"

namespace qlist {

namespace {

constexpr std::size_t kMaxLogicalQubits = 32;
constexpr std::size_t kFullSpaceLimit = 20;

// Logical coordinates packed in one word: x part in bits [0, m), z part in [m, 2m).
struct WordSpace {
    std::size_t m;
    std::uint64_t low_mask;

    explicit WordSpace(std::size_t half) : m(half), low_mask(half == 0 ? 0 : (~std::uint64_t{0} >> (64 - half))) {}

    bool form(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t t = ((a & low_mask) & (b >> m)) ^ ((a >> m) & (b & low_mask));
        return std::popcount(t) & 1;
    }
};

// Word version of symplectic_pairs, same consumption order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> word_pairs(const WordSpace &space, std::vector<std::uint64_t> pool) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::size_t head = 0;
    while (head < pool.size()) {
        std::uint64_t a = pool[head++];
        std::size_t partner = head;
        while (partner < pool.size() && !space.form(a, pool[partner])) ++partner;
        if (partner == pool.size()) continue;
        std::uint64_t b = pool[partner];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
        for (std::size_t i = head; i < pool.size(); ++i) {
            bool with_b = space.form(pool[i], b);
            bool with_a = space.form(pool[i], a);
            if (with_b) pool[i] ^= a;
            if (with_a) pool[i] ^= b;
        }
        pairs.emplace_back(a, b);
    }
    return pairs;
}

// Reduced span of words, for membership tests in the hot loop.
class WordSpan {
   public:
    std::uint64_t reduce(std::uint64_t v) const {
        for (auto b : basis_) v = std::min(v, v ^ b);
        return v;
    }
    bool insert(std::uint64_t v) {
        v = reduce(v);
        if (!v) return false;
        basis_.push_back(v);
        // Keep basis sorted descending by leading bit so the min-trick reduces fully.
        for (std::size_t i = basis_.size() - 1; i > 0 && basis_[i] > basis_[i - 1]; --i) std::swap(basis_[i], basis_[i - 1]);
        return true;
    }
    bool contains(std::uint64_t v) const { return reduce(v) == 0; }

   private:
    std::vector<std::uint64_t> basis_;
};

double zero_draw_fraction(const BiasedSet &set) {
    auto weights = draw_weights(set);
    std::uint64_t keys = std::uint64_t{1} << set.key_bits();
    std::uint64_t zero = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set.elements[i].none()) zero += weights[i];
    }
    return static_cast<double>(zero) / static_cast<double>(keys);
}

// Draw bias after wrap and the zero fallback: moving the zero draws' mass to
// one nonzero element shifts every parity balance by at most twice that mass.
double certified_step_bias(const BiasedSet &set) {
    return std::min(1.0, effective_bias(set) + 2.0 * zero_draw_fraction(set));
}

std::shared_ptr<const BiasedSet> step_set(std::size_t m, double eta_target, double &step_eta) {
    // 2 ell <= 24 keeps the materialized power set below 2^24 elements.
    for (unsigned ell = choose_ell(m, eta_target); ell <= 12; ++ell) {
        if (m <= 2 * ell && m <= kFullSpaceLimit) {
            auto full = std::make_shared<BiasedSet>(full_space(m));
            step_eta = certified_step_bias(*full);
            if (step_eta <= eta_target) return full;
        }
        if (m > (std::size_t{1} << ell)) continue;
        auto power = std::make_shared<BiasedSet>(aghp(m, ell));
        step_eta = certified_step_bias(*power);
        if (step_eta <= eta_target) return power;
    }
    throw std::domain_error("no biased set of length " + std::to_string(m) + " reaches eta " +
                            std::to_string(eta_target));
}

BitVec word_to_bits(std::uint64_t w, std::size_t len) { return BitVec::from_uint(w, len); }

void require_same_base(const KeyedCode &kc, const ListTable &table) {
    if (table.code.n() != kc.base().n() || table.code.generators() != kc.base().generators()) {
        throw std::invalid_argument("list table was not built from this keyed code's base");
    }
}

}  // namespace

std::uint64_t KeySchedule::key_bits() const {
    std::uint64_t total = 0;
    for (const auto &s : sets) total += s->key_bits();
    return total;
}

std::vector<std::uint64_t> KeySchedule::set_sizes() const {
    std::vector<std::uint64_t> sizes;
    for (const auto &s : sets) sizes.push_back(s->size());
    return sizes;
}

KeySchedule make_schedule(std::size_t logical_qubits, std::size_t extra, double eta_target) {
    if (extra > 0 && extra >= logical_qubits) {
        throw std::domain_error("need K <= k - 1 secret generators (K = " + std::to_string(extra) +
                                ", k = " + std::to_string(logical_qubits) + ")");
    }
    if (logical_qubits > kMaxLogicalQubits) throw std::domain_error("at most 32 logical qubits supported");
    if (!(eta_target > 0 && eta_target <= 1)) throw std::domain_error("eta target must lie in (0, 1]");
    KeySchedule schedule;
    schedule.logical_qubits = logical_qubits;
    schedule.extra = extra;
    schedule.eta_target = eta_target;
    for (std::size_t j = 0; j < extra; ++j) {
        double eta = 0;
        schedule.sets.push_back(step_set(2 * (logical_qubits - j), eta_target, eta));
        schedule.step_eta.push_back(eta);
        schedule.eta_eff = std::max(schedule.eta_eff, eta);
    }
    return schedule;
}

const BitVec &draw_nonzero(const BiasedSet &set, const BitVec &key) {
    const BitVec &v = draw(set, key);
    if (v.any()) return v;
    for (const auto &e : set.elements) {
        if (e.any()) return e;
    }
    throw std::domain_error("biased set has no nonzero element");
}

LogicalExtension extend_logical(const KeySchedule &schedule, const BitVec &key) {
    if (key.size() != schedule.key_bits()) {
        throw std::invalid_argument("key has " + std::to_string(key.size()) + " bits, schedule consumes " +
                                    std::to_string(schedule.key_bits()));
    }
    std::size_t k = schedule.logical_qubits;
    WordSpace space(k);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> basis;
    for (std::size_t i = 0; i < k; ++i) basis.emplace_back(std::uint64_t{1} << i, std::uint64_t{1} << (k + i));

    LogicalExtension ext;
    std::size_t offset = 0;
    for (const auto &set : schedule.sets) {
        std::size_t bits = set->key_bits();
        std::uint64_t a = draw_nonzero(*set, key.slice(offset, bits)).to_uint();
        offset += bits;
        std::size_t p = basis.size();
        std::uint64_t probe = 0;
        for (std::size_t i = 0; i < p; ++i) {
            if ((a >> i) & 1) probe ^= basis[i].first;
            if ((a >> (p + i)) & 1) probe ^= basis[i].second;
        }
        std::vector<std::uint64_t> pool{probe};
        for (const auto &[x, z] : basis) {
            pool.push_back(x);
            pool.push_back(z);
        }
        auto pairs = word_pairs(space, std::move(pool));
        if (pairs.size() != p || pairs.front().first != probe) throw std::logic_error("extend_logical: basis lost rank");
        basis.assign(pairs.begin() + 1, pairs.end());
        ext.probes.push_back(word_to_bits(probe, 2 * k));
    }
    for (const auto &[x, z] : basis) ext.payload.emplace_back(word_to_bits(x, 2 * k), word_to_bits(z, 2 * k));
    return ext;
}

BitVec KeyedCode::payload_class(const BitVec &base_class) const {
    std::size_t p = payload_qubits();
    BitVec out(2 * p);
    for (std::size_t i = 0; i < p; ++i) {
        if (symplectic_form(base_class, extension_.payload[i].second)) out.set(i, true);
        if (symplectic_form(base_class, extension_.payload[i].first)) out.set(p + i, true);
    }
    return out;
}

StabilizerCode KeyedCode::as_code() const {
    std::vector<PauliOp> gens = base_.generators();
    gens.insert(gens.end(), extra_.begin(), extra_.end());
    std::vector<PauliOp> logicals;
    for (const auto &[x, z] : extension_.payload) {
        logicals.push_back(lift_logical(base_, x));
        logicals.push_back(lift_logical(base_, z));
    }
    return StabilizerCode::validate(std::move(gens), base_.n(), payload_qubits(), std::move(logicals));
}

KeyedCode augment(const StabilizerCode &base, std::shared_ptr<const KeySchedule> schedule, const BitVec &key) {
    if (schedule->logical_qubits != base.k()) throw std::invalid_argument("schedule built for a different k");
    LogicalExtension ext = extend_logical(*schedule, key);
    std::vector<PauliOp> extra;
    extra.reserve(ext.probes.size());
    for (const auto &probe : ext.probes) extra.push_back(lift_logical(base, probe));
    return KeyedCode(base, std::move(schedule), key, std::move(ext), std::move(extra));
}

KeyedCode augment(const StabilizerCode &base, std::size_t extra, const BitVec &key, double eta_target) {
    return augment(base, std::make_shared<const KeySchedule>(make_schedule(base.k(), extra, eta_target)), key);
}

FullSyndrome full_syndrome(const KeyedCode &kc, const PauliOp &e) {
    FullSyndrome out{syndrome(kc.base(), e), BitVec(kc.extra_count())};
    for (std::size_t j = 0; j < kc.extra_count(); ++j) {
        if (omega(e, kc.extra()[j])) out.secret_bits.set(j, true);
    }
    return out;
}

const char *to_string(DecodeStatus status) {
    switch (status) {
        case DecodeStatus::kUnique:
            return "unique";
        case DecodeStatus::kAmbiguous:
            return "ambiguous";
        case DecodeStatus::kUncorrectable:
            return "uncorrectable";
    }
    return "?";
}

DecodeResult decode(const KeyedCode &kc, const ListTable &table, const FullSyndrome &syn) {
    require_same_base(kc, table);
    if (syn.secret_bits.size() != kc.extra_count()) throw std::invalid_argument("decode: wrong number of secret bits");
    DecodeResult result;
    result.correction = PauliOp(kc.base().n());
    auto entry = decode_list(table, syn.public_bits);
    if (!entry) return result;

    const auto &probes = kc.extra_classes();
    BitVec rep_bits(kc.extra_count());
    for (std::size_t j = 0; j < kc.extra_count(); ++j) {
        if (omega(entry->rep, kc.extra()[j])) rep_bits.set(j, true);
    }
    std::size_t r = entry->rank();
    if (r >= 31) throw std::domain_error("decode: list too long to enumerate");
    std::vector<BitVec> matches;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        BitVec v(2 * kc.base().k());
        for (std::size_t b = 0; b < r; ++b) {
            if ((mask >> b) & 1) v ^= entry->class_basis[b];
        }
        BitVec bits = rep_bits;
        for (std::size_t j = 0; j < probes.size(); ++j) {
            if (symplectic_form(v, probes[j])) bits.flip(j);
        }
        if (bits == syn.secret_bits) matches.push_back(std::move(v));
    }
    result.consistent = matches.size();
    if (matches.empty()) return result;

    result.status = DecodeStatus::kUnique;
    for (std::size_t i = 1; i < matches.size(); ++i) {
        if (kc.payload_class(matches[i] ^ matches[0]).any()) {
            result.status = DecodeStatus::kAmbiguous;
            break;
        }
    }
    result.correction = (entry->rep * lift_logical(kc.base(), matches[0])).hermitian();
    result.list_class = std::move(matches[0]);
    return result;
}

TrialOutcome run_trial(const KeyedCode &kc, const ListTable &table, const PauliOp &e) {
    if (e.weight() > table.t) {
        throw std::invalid_argument("run_trial: error weight " + std::to_string(e.weight()) + " exceeds t = " +
                                    std::to_string(table.t));
    }
    TrialOutcome out;
    out.syndrome = full_syndrome(kc, e);
    DecodeResult decoded = decode(kc, table, out.syndrome);
    out.status = decoded.status;
    if (decoded.status == DecodeStatus::kUncorrectable) return out;
    const PauliOp &rep = table.entries.at(out.syndrome.public_bits).rep;
    out.decoded_class = kc.payload_class(decoded.list_class);
    out.truth_class = kc.payload_class(logical_class(kc.base(), rep.dagger() * e));
    out.success = decoded.status == DecodeStatus::kUnique && out.decoded_class == out.truth_class;
    return out;
}

KeyedFactory::KeyedFactory(StabilizerCode base_code, std::size_t extra, double eta_target)
    : base(std::move(base_code)),
      schedule(std::make_shared<const KeySchedule>(make_schedule(base.k(), extra, eta_target))) {}

std::vector<KeyedCode> enumerate_keyed_codes(const KeyedFactory &factory) {
    std::uint64_t bits = factory.key_bits();
    if (bits > 16) throw std::domain_error("key space of 2^" + std::to_string(bits) + " keys is too large to enumerate");
    std::vector<KeyedCode> ensemble;
    ensemble.reserve(std::size_t{1} << bits);
    for (std::uint64_t key = 0; key < (std::uint64_t{1} << bits); ++key) {
        ensemble.push_back(factory.make(BitVec::from_uint(key, bits)));
    }
    return ensemble;
}

double exact_failure(const std::vector<KeyedCode> &ensemble, const ListTable &table, const PauliOp &e) {
    if (ensemble.empty()) throw std::invalid_argument("exact_failure: empty ensemble");
    std::size_t failures = 0;
    for (const auto &kc : ensemble) {
        if (!run_trial(kc, table, e).success) ++failures;
    }
    return static_cast<double>(failures) / static_cast<double>(ensemble.size());
}

DistinguishResult distinguish_experiment(std::size_t logical_qubits, std::size_t list_length, std::size_t extra,
                                         double eta_target, std::uint64_t trials, std::uint64_t seed,
                                         unsigned threads, bool keep_records) {
    if (list_length > logical_qubits) throw std::domain_error("list length exceeds the logical qubit count");
    if (list_length > 20) throw std::domain_error("list length above 20 is not enumerable");
    if (trials == 0) throw std::domain_error("distinguish_experiment: trials must be positive");
    KeySchedule schedule = make_schedule(logical_qubits, extra, eta_target);
    std::size_t dim = 2 * logical_qubits;
    WordSpace space(logical_qubits);

    struct Tally {
        std::uint64_t failures = 0;
        std::vector<StepCount> steps;
    };
    unsigned workers = std::max(1u, threads);
    std::vector<Tally> tallies(workers, Tally{0, std::vector<StepCount>(extra)});
    std::vector<CoreRecord> records(keep_records ? trials : 0);

    parallel_for(trials, workers, [&](std::size_t trial, unsigned worker) {
        Rng rng = trial_rng(seed, trial);
        Tally &tally = tallies[worker];

        std::vector<std::uint64_t> list;
        WordSpan list_span;
        while (list.size() < list_length) {
            std::uint64_t v = random_bits(rng, dim).to_uint();
            if (list_span.insert(v)) list.push_back(v);
        }
        BitVec key = random_bits(rng, schedule.key_bits());
        LogicalExtension ext = extend_logical(schedule, key);
        std::vector<std::uint64_t> probes;
        for (const auto &p : ext.probes) probes.push_back(p.to_uint());

        if (!list.empty()) {
            for (std::size_t j = 0; j < probes.size(); ++j) {
                ++tally.steps[j].given;
                if (space.form(list[0], probes[j])) break;
                ++tally.steps[j].held;
            }
        }

        WordSpan probe_span;
        for (auto p : probes) probe_span.insert(p);
        std::vector<std::uint64_t> signature(list.size(), 0);
        for (std::size_t l = 0; l < list.size(); ++l) {
            for (std::size_t j = 0; j < probes.size(); ++j) {
                if (space.form(list[l], probes[j])) signature[l] |= std::uint64_t{1} << j;
            }
        }
        // Gray-code walk over nonzero combinations of the list generators.
        std::uint64_t sig = 0;
        std::uint64_t diff = 0;
        bool collision = false;
        for (std::uint64_t g = 1; g < (std::uint64_t{1} << list.size()) && !collision; ++g) {
            std::size_t flip = std::countr_zero(g);
            sig ^= signature[flip];
            diff ^= list[flip];
            collision = sig == 0 && !probe_span.contains(diff);
        }
        if (collision) ++tally.failures;
        if (keep_records) {
            BitVec probe_bits(probes.size());
            if (!list.empty()) probe_bits = BitVec::from_uint(signature[0], probes.size());
            records[trial] = CoreRecord{std::move(key), std::move(probe_bits), collision};
        }
    });

    DistinguishResult result;
    result.trials = trials;
    result.steps.assign(extra, StepCount{});
    for (const auto &t : tallies) {
        result.failures += t.failures;
        for (std::size_t j = 0; j < extra; ++j) {
            result.steps[j].given += t.steps[j].given;
            result.steps[j].held += t.steps[j].held;
        }
    }
    result.rate = static_cast<double>(result.failures) / static_cast<double>(trials);
    result.ci = wilson_interval(result.failures, trials);
    result.eta_eff = schedule.eta_eff;
    result.bound = failure_bound(static_cast<unsigned>(list_length), schedule.eta_eff, extra);
    result.key_bits = schedule.key_bits();
    result.records = std::move(records);
    return result;
}

}  // namespace qlist
