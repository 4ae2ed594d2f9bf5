#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <absl/container/btree_set.h>
#include <absl/container/flat_hash_map.h>

#include "mesur/rdf/term.hpp"

namespace mesur::store {

using TermId = std::uint64_t;

/// Label prefix of every blank node minted by the system. User data loaded
/// with labels in this space is still accepted; minting skips labels that
/// are already in use.
inline constexpr std::string_view kGeneratedBlankPrefix = "mesur_gen_";

struct IdTriple {
    TermId s = 0;
    TermId p = 0;
    TermId o = 0;
    friend bool operator==(const IdTriple&, const IdTriple&) = default;
    friend auto operator<=>(const IdTriple&, const IdTriple&) = default;
};

/// A triple pattern over dictionary ids; nullopt slots are wildcards.
struct IdPattern {
    std::optional<TermId> s;
    std::optional<TermId> p;
    std::optional<TermId> o;
};

/// Bijective Term <-> dense integer id mapping. Ids are assigned in first-use
/// order and never reused.
class Dictionary {
public:
    TermId intern(const rdf::Term& term);
    std::optional<TermId> find(const rdf::Term& term) const;
    const rdf::Term& term(TermId id) const { return terms_.at(id); }
    std::size_t size() const noexcept { return terms_.size(); }
    void clear();

private:
    std::vector<rdf::Term> terms_;
    absl::flat_hash_map<rdf::Term, TermId, rdf::TermHash> ids_;
};

struct Variable {
    std::string name;
    friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternSlot = std::variant<rdf::Term, Variable>;

struct TriplePattern {
    PatternSlot subject;
    PatternSlot predicate;
    PatternSlot object;
};

/// Variable name -> bound term, in order of first appearance in the pattern.
using Binding = std::vector<std::pair<std::string, rdf::Term>>;

/// In-memory triple store with set semantics. Terms are dictionary-encoded
/// and every triple is kept in three sorted permutations (SPO, POS, OSP), so
/// any pattern with at least one bound slot is a prefix range scan.
///
/// Not internally synchronized: many concurrent readers or one writer.
class TripleStore {
public:
    /// Returns false if the triple was already present. Throws
    /// InvalidArgument for ill-formed triples.
    bool insert(const rdf::Triple& t);
    /// Returns false if the triple was absent.
    bool remove(const rdf::Triple& t);
    bool contains(const rdf::Triple& t) const;

    /// Inserts a batch; returns the number of triples that were new.
    std::size_t bulk_load(std::span<const rdf::Triple> triples);

    std::size_t size() const noexcept { return spo_.size(); }
    bool empty() const noexcept { return spo_.empty(); }
    void clear();

    const Dictionary& dictionary() const noexcept { return dict_; }
    std::optional<TermId> lookup(const rdf::Term& t) const { return dict_.find(t); }
    const rdf::Term& term(TermId id) const { return dict_.term(id); }

    /// Calls fn(const IdTriple&) for every matching triple in index order.
    /// fn may return bool; returning false stops the scan.
    template <typename F>
    void scan(const IdPattern& pattern, F&& fn) const;

    /// Number of triples matching the pattern.
    std::size_t count(const IdPattern& pattern) const;

    /// Term-level matching. Repeated variables must bind equal terms.
    void match(const TriplePattern& pattern, const std::function<void(const Binding&)>& fn) const;
    std::vector<Binding> match(const TriplePattern& pattern) const;

    /// Matching triples for a pattern given as optional terms.
    std::vector<rdf::Triple> find(const std::optional<rdf::Term>& s, const std::optional<rdf::Term>& p,
                                  const std::optional<rdf::Term>& o) const;
    /// Objects of (s, p, *), in index order.
    std::vector<rdf::Term> objects(const rdf::Term& s, const rdf::Term& p) const;
    /// Subjects of (*, p, o), in index order.
    std::vector<rdf::Term> subjects(const rdf::Term& p, const rdf::Term& o) const;
    /// True if the term occurs in any position of any triple.
    bool mentions(const rdf::Term& t) const;

    /// All triples in SPO id order.
    std::vector<rdf::Triple> triples() const;

    /// A blank node whose label is not yet used by this store.
    rdf::Term mint_blank();

    /// Full-scan check that the three permutations hold the same triple set.
    bool verify_indexes() const;

    /// Binary snapshot: header (magic, version, term and triple counts), the
    /// dictionary compacted to referenced terms and numbered in term order,
    /// then the sorted SPO, POS and OSP runs. Equal stores produce equal bytes.
    void save(std::ostream& out) const;
    static TripleStore load(std::istream& in);
    void save_file(const std::string& path) const;
    static TripleStore load_file(const std::string& path);

    static constexpr std::uint32_t kSnapshotVersion = 1;

private:
    using Key = std::array<TermId, 3>;
    using Index = absl::btree_set<Key>;

    template <typename F>
    static void scan_prefix(const Index& index, const Key& prefix, std::size_t length, int order, F&& fn);
    static IdTriple decode_key(const Key& k, int order);

    Dictionary dict_;
    Index spo_;  // order 0: (s, p, o)
    Index pos_;  // order 1: (p, o, s)
    Index osp_;  // order 2: (o, s, p)
    std::uint64_t blank_counter_ = 0;
};

inline IdTriple TripleStore::decode_key(const Key& k, int order) {
    switch (order) {
        case 1: return {k[2], k[0], k[1]};
        case 2: return {k[1], k[2], k[0]};
        default: return {k[0], k[1], k[2]};
    }
}

template <typename F>
void TripleStore::scan_prefix(const Index& index, const Key& prefix, std::size_t length, int order, F&& fn) {
    Key lo = {0, 0, 0};
    for (std::size_t i = 0; i < length; ++i) lo[i] = prefix[i];
    for (auto it = index.lower_bound(lo); it != index.end(); ++it) {
        const Key& k = *it;
        bool in_range = true;
        for (std::size_t i = 0; i < length; ++i) {
            if (k[i] != prefix[i]) {
                in_range = false;
                break;
            }
        }
        if (!in_range) break;
        const IdTriple t = decode_key(k, order);
        if constexpr (std::is_same_v<std::invoke_result_t<F&, const IdTriple&>, bool>) {
            if (!fn(t)) return;
        } else {
            fn(t);
        }
    }
}

template <typename F>
void TripleStore::scan(const IdPattern& q, F&& fn) const {
    const bool s = q.s.has_value(), p = q.p.has_value(), o = q.o.has_value();
    if (s && p && o) {
        scan_prefix(spo_, {*q.s, *q.p, *q.o}, 3, 0, fn);
    } else if (s && p) {
        scan_prefix(spo_, {*q.s, *q.p, 0}, 2, 0, fn);
    } else if (s && o) {
        scan_prefix(osp_, {*q.o, *q.s, 0}, 2, 2, fn);
    } else if (s) {
        scan_prefix(spo_, {*q.s, 0, 0}, 1, 0, fn);
    } else if (p && o) {
        scan_prefix(pos_, {*q.p, *q.o, 0}, 2, 1, fn);
    } else if (p) {
        scan_prefix(pos_, {*q.p, 0, 0}, 1, 1, fn);
    } else if (o) {
        scan_prefix(osp_, {*q.o, 0, 0}, 1, 2, fn);
    } else {
        scan_prefix(spo_, {0, 0, 0}, 0, 0, fn);
    }
}

}  // namespace mesur::store
