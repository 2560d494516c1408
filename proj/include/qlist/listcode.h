#ifndef QLIST_LISTCODE_H
#define QLIST_LISTCODE_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlist/pauli.h"
#include "qlist/stabilizer.h"

namespace qlist {

/// Errors of weight <= t sharing one syndrome. `rep` is the first of them in
/// canonical enumeration order; `class_basis` is the reduced basis of the span
/// of logical_class(rep^dagger E) over all members E.
struct ListEntry {
    PauliOp rep;
    std::vector<BitVec> class_basis;
    std::size_t members = 0;

    std::size_t rank() const { return class_basis.size(); }
};

/// Syndrome -> list entry for every syndrome reached by some weight <= t error.
struct ListTable {
    StabilizerCode code;
    std::size_t t = 0;
    std::uint64_t error_count = 0;
    std::map<Syndrome, ListEntry> entries;
};

ListTable build_table(const StabilizerCode &code, std::size_t t, std::uint64_t cap = kDefaultEnumerationCap);

struct ListReport {
    /// Largest class rank over all syndromes; the code is an [n,k,t,L]-list
    /// code exactly for L >= l_min.
    std::size_t l_min = 0;
    /// First syndrome (in table order) attaining l_min.
    Syndrome worst_syndrome;
    std::size_t entry_count = 0;
    std::uint64_t error_count = 0;
};

ListReport list_report(const ListTable &table);
ListReport min_list_length(const StabilizerCode &code, std::size_t t, std::uint64_t cap = kDefaultEnumerationCap);

/// Entry for a syndrome, or nullopt when no weight <= t error produces it
/// ("uncorrectable").
std::optional<ListEntry> decode_list(const ListTable &table, const Syndrome &s);

/// N_E^{L+1} 2^{-L(n-k)} with N_E = error_count(n, t), evaluated in log space.
double union_bound(std::size_t n, std::size_t k, std::size_t t, std::size_t list_length);
double log2_union_bound(std::size_t n, std::size_t k, std::size_t t, std::size_t list_length);
/// The tighter C(N_E, L+1) 2^{-L(n-k)}.
double union_bound_binomial(std::size_t n, std::size_t k, std::size_t t, std::size_t list_length);

/// Audit text: header, then one line per syndrome:
/// "<syndrome hex> <rep> <basis rows as bit strings, comma separated, or ->".
std::string write_table(const ListTable &table);

}  // namespace qlist

#endif
