#include "mesur/store/triple_store.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "mesur/error.hpp"

namespace mesur::store {

using rdf::Term;
using rdf::Triple;

// ---------------------------------------------------------------- Dictionary

TermId Dictionary::intern(const Term& term) {
    auto [it, inserted] = ids_.try_emplace(term, static_cast<TermId>(terms_.size()));
    if (inserted) terms_.push_back(term);
    return it->second;
}

std::optional<TermId> Dictionary::find(const Term& term) const {
    auto it = ids_.find(term);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

void Dictionary::clear() {
    terms_.clear();
    ids_.clear();
}

// --------------------------------------------------------------- TripleStore

bool TripleStore::insert(const Triple& t) {
    if (!rdf::is_well_formed(t)) {
        if (t.subject.is_literal()) throw InvalidArgument("literal in subject position: " + t.subject.to_string());
        throw InvalidArgument("predicate must be an IRI, got " + t.predicate.to_string());
    }
    const TermId s = dict_.intern(t.subject);
    const TermId p = dict_.intern(t.predicate);
    const TermId o = dict_.intern(t.object);
    if (!spo_.insert({s, p, o}).second) return false;
    pos_.insert({p, o, s});
    osp_.insert({o, s, p});
    return true;
}

bool TripleStore::remove(const Triple& t) {
    const auto s = dict_.find(t.subject);
    const auto p = dict_.find(t.predicate);
    const auto o = dict_.find(t.object);
    if (!s || !p || !o) return false;
    if (spo_.erase(Key{*s, *p, *o}) == 0) return false;
    pos_.erase(Key{*p, *o, *s});
    osp_.erase(Key{*o, *s, *p});
    return true;
}

bool TripleStore::contains(const Triple& t) const {
    const auto s = dict_.find(t.subject);
    const auto p = dict_.find(t.predicate);
    const auto o = dict_.find(t.object);
    return s && p && o && spo_.contains(Key{*s, *p, *o});
}

std::size_t TripleStore::bulk_load(std::span<const Triple> triples) {
    std::vector<Key> keys;
    keys.reserve(triples.size());
    for (const auto& t : triples) {
        if (!rdf::is_well_formed(t)) {
            throw InvalidArgument("ill-formed triple in bulk load: " + t.subject.to_string() + " " +
                                  t.predicate.to_string() + " " + t.object.to_string());
        }
        keys.push_back({dict_.intern(t.subject), dict_.intern(t.predicate), dict_.intern(t.object)});
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::vector<Key> fresh;
    if (spo_.empty()) {
        fresh = std::move(keys);
    } else {
        fresh.reserve(keys.size());
        for (const auto& k : keys) {
            if (!spo_.contains(k)) fresh.push_back(k);
        }
    }
    spo_.insert(fresh.begin(), fresh.end());

    std::vector<Key> permuted;
    permuted.reserve(fresh.size());
    for (const auto& k : fresh) permuted.push_back({k[1], k[2], k[0]});
    std::sort(permuted.begin(), permuted.end());
    pos_.insert(permuted.begin(), permuted.end());
    permuted.clear();
    for (const auto& k : fresh) permuted.push_back({k[2], k[0], k[1]});
    std::sort(permuted.begin(), permuted.end());
    osp_.insert(permuted.begin(), permuted.end());
    return fresh.size();
}

void TripleStore::clear() {
    dict_.clear();
    spo_.clear();
    pos_.clear();
    osp_.clear();
    blank_counter_ = 0;
}

std::size_t TripleStore::count(const IdPattern& pattern) const {
    std::size_t n = 0;
    scan(pattern, [&](const IdTriple&) { ++n; });
    return n;
}

void TripleStore::match(const TriplePattern& pattern, const std::function<void(const Binding&)>& fn) const {
    const PatternSlot* slots[3] = {&pattern.subject, &pattern.predicate, &pattern.object};
    IdPattern q;
    std::optional<TermId>* qslots[3] = {&q.s, &q.p, &q.o};
    // variable name per slot, and the first slot index holding that variable
    std::vector<std::string> names;
    int var_index[3] = {-1, -1, -1};
    for (int i = 0; i < 3; ++i) {
        if (const auto* term = std::get_if<Term>(slots[i])) {
            auto id = dict_.find(*term);
            if (!id) return;
            *qslots[i] = *id;
        } else {
            const auto& name = std::get<Variable>(*slots[i]).name;
            auto it = std::find(names.begin(), names.end(), name);
            var_index[i] = static_cast<int>(it - names.begin());
            if (it == names.end()) names.push_back(name);
        }
    }

    Binding binding;
    scan(q, [&](const IdTriple& t) {
        const TermId ids[3] = {t.s, t.p, t.o};
        std::vector<std::optional<TermId>> values(names.size());
        for (int i = 0; i < 3; ++i) {
            if (var_index[i] < 0) continue;
            auto& v = values[static_cast<std::size_t>(var_index[i])];
            if (v && *v != ids[i]) return;
            v = ids[i];
        }
        binding.clear();
        for (std::size_t k = 0; k < names.size(); ++k) binding.emplace_back(names[k], dict_.term(*values[k]));
        fn(binding);
    });
}

std::vector<Binding> TripleStore::match(const TriplePattern& pattern) const {
    std::vector<Binding> out;
    match(pattern, [&](const Binding& b) { out.push_back(b); });
    return out;
}

std::vector<Triple> TripleStore::find(const std::optional<Term>& s, const std::optional<Term>& p,
                                      const std::optional<Term>& o) const {
    IdPattern q;
    const std::optional<Term>* in[3] = {&s, &p, &o};
    std::optional<TermId>* out[3] = {&q.s, &q.p, &q.o};
    for (int i = 0; i < 3; ++i) {
        if (!in[i]->has_value()) continue;
        auto id = dict_.find(**in[i]);
        if (!id) return {};
        *out[i] = *id;
    }
    std::vector<Triple> result;
    scan(q, [&](const IdTriple& t) { result.push_back({term(t.s), term(t.p), term(t.o)}); });
    return result;
}

std::vector<Term> TripleStore::objects(const Term& s, const Term& p) const {
    std::vector<Term> out;
    auto sid = dict_.find(s);
    auto pid = dict_.find(p);
    if (!sid || !pid) return out;
    scan(IdPattern{sid, pid, std::nullopt}, [&](const IdTriple& t) { out.push_back(term(t.o)); });
    return out;
}

std::vector<Term> TripleStore::subjects(const Term& p, const Term& o) const {
    std::vector<Term> out;
    auto pid = dict_.find(p);
    auto oid = dict_.find(o);
    if (!pid || !oid) return out;
    scan(IdPattern{std::nullopt, pid, oid}, [&](const IdTriple& t) { out.push_back(term(t.s)); });
    return out;
}

bool TripleStore::mentions(const Term& t) const {
    auto id = dict_.find(t);
    if (!id) return false;
    bool found = false;
    auto hit = [&](const IdTriple&) {
        found = true;
        return false;
    };
    scan(IdPattern{id, std::nullopt, std::nullopt}, hit);
    if (!found) scan(IdPattern{std::nullopt, id, std::nullopt}, hit);
    if (!found) scan(IdPattern{std::nullopt, std::nullopt, id}, hit);
    return found;
}

std::vector<Triple> TripleStore::triples() const {
    std::vector<Triple> out;
    out.reserve(spo_.size());
    for (const auto& k : spo_) out.push_back({term(k[0]), term(k[1]), term(k[2])});
    return out;
}

Term TripleStore::mint_blank() {
    while (true) {
        Term candidate = Term::blank(std::string(kGeneratedBlankPrefix) + std::to_string(blank_counter_++));
        if (!dict_.find(candidate)) {
            // reserve the label so a second mint before insertion differs
            dict_.intern(candidate);
            return candidate;
        }
    }
}

bool TripleStore::verify_indexes() const {
    if (spo_.size() != pos_.size() || spo_.size() != osp_.size()) return false;
    std::vector<Key> a(spo_.begin(), spo_.end());
    std::vector<Key> b;
    b.reserve(pos_.size());
    for (const auto& k : pos_) b.push_back({k[2], k[0], k[1]});
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    b.clear();
    for (const auto& k : osp_) b.push_back({k[1], k[2], k[0]});
    std::sort(b.begin(), b.end());
    return a == b;
}

// ------------------------------------------------------------------ snapshot

namespace {

constexpr char kMagic[8] = {'M', 'E', 'S', 'U', 'R', 'S', 'T', 'O'};

void put_u8(std::ostream& out, std::uint8_t v) { out.put(static_cast<char>(v)); }

void put_u32(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(b, 8);
}

void read_exact(std::istream& in, char* buf, std::size_t n) {
    if (!in.read(buf, static_cast<std::streamsize>(n))) throw FormatError("truncated store snapshot");
}

std::uint8_t get_u8(std::istream& in) {
    char c;
    read_exact(in, &c, 1);
    return static_cast<std::uint8_t>(c);
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    read_exact(in, reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    read_exact(in, reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

}  // namespace

void TripleStore::save(std::ostream& out) const {
    // Only terms still in use are written, in term order, so the bytes depend
    // on the triple set alone and not on how it was built.
    std::vector<bool> used(dict_.size(), false);
    for (const auto& k : spo_) {
        used[k[0]] = used[k[1]] = used[k[2]] = true;
    }
    std::vector<TermId> order;
    for (std::size_t id = 0; id < used.size(); ++id) {
        if (used[id]) order.push_back(id);
    }
    std::sort(order.begin(), order.end(), [&](TermId a, TermId b) { return dict_.term(a) < dict_.term(b); });
    std::vector<TermId> remap(dict_.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = i;

    out.write(kMagic, sizeof kMagic);
    put_u32(out, kSnapshotVersion);
    put_u64(out, order.size());
    put_u64(out, spo_.size());
    for (TermId id : order) {
        const Term& t = dict_.term(id);
        put_u8(out, static_cast<std::uint8_t>(t.kind()));
        put_u8(out, static_cast<std::uint8_t>(t.datatype()));
        put_u32(out, static_cast<std::uint32_t>(t.value().size()));
        out.write(t.value().data(), static_cast<std::streamsize>(t.value().size()));
    }
    std::vector<std::array<TermId, 3>> run;
    run.reserve(spo_.size());
    for (const Index* index : {&spo_, &pos_, &osp_}) {
        run.clear();
        for (const auto& k : *index) run.push_back({remap[k[0]], remap[k[1]], remap[k[2]]});
        std::sort(run.begin(), run.end());
        for (const auto& k : run) {
            put_u64(out, k[0]);
            put_u64(out, k[1]);
            put_u64(out, k[2]);
        }
    }
    if (!out) throw FormatError("failed writing store snapshot");
}

TripleStore TripleStore::load(std::istream& in) {
    char magic[8];
    read_exact(in, magic, sizeof magic);
    if (!std::equal(std::begin(magic), std::end(magic), std::begin(kMagic))) {
        throw FormatError("not a store snapshot (bad magic)");
    }
    const std::uint32_t version = get_u32(in);
    if (version != kSnapshotVersion) {
        throw FormatError("unsupported snapshot version " + std::to_string(version));
    }
    const std::uint64_t term_count = get_u64(in);
    const std::uint64_t triple_count = get_u64(in);

    TripleStore store;
    for (std::uint64_t i = 0; i < term_count; ++i) {
        const auto kind = static_cast<rdf::TermKind>(get_u8(in));
        const auto dt = static_cast<rdf::Datatype>(get_u8(in));
        const std::uint32_t len = get_u32(in);
        std::string value(len, '\0');
        if (len > 0) read_exact(in, value.data(), len);
        Term t;
        try {
            switch (kind) {
                case rdf::TermKind::Iri: t = Term::iri(std::move(value)); break;
                case rdf::TermKind::Blank: t = Term::blank(std::move(value)); break;
                case rdf::TermKind::Literal: t = Term::literal(std::move(value), dt); break;
                default: throw FormatError("bad term kind in snapshot");
            }
        } catch (const InvalidArgument& e) {
            throw FormatError(std::string("bad term in snapshot: ") + e.what());
        }
        if (store.dict_.intern(t) != i) throw FormatError("duplicate term in snapshot dictionary");
    }

    for (Index* index : {&store.spo_, &store.pos_, &store.osp_}) {
        Key prev{};
        for (std::uint64_t i = 0; i < triple_count; ++i) {
            Key k{get_u64(in), get_u64(in), get_u64(in)};
            if (k[0] >= term_count || k[1] >= term_count || k[2] >= term_count) {
                throw FormatError("term id out of range in snapshot");
            }
            if (i > 0 && !(prev < k)) throw FormatError("snapshot index run is not strictly sorted");
            index->insert(index->end(), k);
            prev = k;
        }
    }
    if (!store.verify_indexes()) throw FormatError("snapshot index runs disagree");
    return store;
}

void TripleStore::save_file(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot open '" + tmp + "' for writing");
        save(out);
        out.flush();
        if (!out) throw FormatError("failed writing '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw FormatError("cannot replace '" + path + "'");
}

TripleStore TripleStore::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open store snapshot '" + path + "'");
    return load(in);
}

}  // namespace mesur::store
