#include "qlist/listcode.h"

#include <cmath>
#include <sstream>

namespace qlist {

ListTable build_table(const StabilizerCode &code, std::size_t t, std::uint64_t cap) {
    ErrorSet errors = enumerate_errors(code.n(), t, cap);
    ListTable table{code, t, errors.elements.size(), {}};
    std::map<Syndrome, SpanBuilder> spans;
    for (const auto &e : errors.elements) {
        Syndrome s = syndrome(code, e);
        auto [it, fresh] = table.entries.try_emplace(s);
        ListEntry &entry = it->second;
        ++entry.members;
        if (fresh) {
            entry.rep = e;
            spans.emplace(s, SpanBuilder(2 * code.k()));
            continue;
        }
        spans.at(s).insert(logical_class(code, entry.rep.dagger() * e));
    }
    for (auto &[s, entry] : table.entries) entry.class_basis = spans.at(s).basis();
    return table;
}

ListReport list_report(const ListTable &table) {
    ListReport report;
    report.entry_count = table.entries.size();
    report.error_count = table.error_count;
    bool first = true;
    for (const auto &[s, entry] : table.entries) {
        if (first || entry.rank() > report.l_min) {
            report.l_min = entry.rank();
            report.worst_syndrome = s;
            first = false;
        }
    }
    return report;
}

ListReport min_list_length(const StabilizerCode &code, std::size_t t, std::uint64_t cap) {
    return list_report(build_table(code, t, cap));
}

std::optional<ListEntry> decode_list(const ListTable &table, const Syndrome &s) {
    if (s.bits.size() != table.code.n() - table.code.k()) {
        throw std::invalid_argument("decode_list: syndrome has the wrong length");
    }
    auto it = table.entries.find(s);
    if (it == table.entries.end()) return std::nullopt;
    return it->second;
}

double log2_union_bound(std::size_t n, std::size_t k, std::size_t t, std::size_t list_length) {
    double log_ne = std::log2(static_cast<double>(error_count(n, t)));
    return static_cast<double>(list_length + 1) * log_ne - static_cast<double>(list_length) * static_cast<double>(n - k);
}

double union_bound(std::size_t n, std::size_t k, std::size_t t, std::size_t list_length) {
    return std::exp2(log2_union_bound(n, k, t, list_length));
}

double union_bound_binomial(std::size_t n, std::size_t k, std::size_t t, std::size_t list_length) {
    double ne = static_cast<double>(error_count(n, t));
    double choose = static_cast<double>(list_length + 1);
    if (choose > ne) return 0.0;
    double log_binom = (std::lgamma(ne + 1) - std::lgamma(choose + 1) - std::lgamma(ne - choose + 1)) / std::log(2.0);
    return std::exp2(log_binom - static_cast<double>(list_length) * static_cast<double>(n - k));
}

std::string write_table(const ListTable &table) {
    std::ostringstream out;
    out << "# qlist-table v1\n";
    out << "n " << table.code.n() << " k " << table.code.k() << " t " << table.t << " entries " << table.entries.size()
        << '\n';
    for (const auto &[s, entry] : table.entries) {
        out << s.hex() << ' ' << entry.rep.str() << ' ';
        if (entry.class_basis.empty()) {
            out << '-';
        } else {
            for (std::size_t i = 0; i < entry.class_basis.size(); ++i) {
                if (i) out << ',';
                out << entry.class_basis[i].str();
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qlist
