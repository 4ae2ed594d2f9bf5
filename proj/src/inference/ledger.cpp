#include "mesur/inference/ledger.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mesur/error.hpp"
#include "mesur/rdf/ntriples.hpp"

namespace mesur::inference {

namespace {
const std::set<rdf::Triple> kEmpty;
constexpr std::string_view kMagic = "mesur-ledger 1";
}  // namespace

void MaterializationLedger::record(const std::string& rule, const rdf::Triple& t) { entries_[rule].insert(t); }

bool MaterializationLedger::forget(const std::string& rule, const rdf::Triple& t) {
    auto it = entries_.find(rule);
    if (it == entries_.end() || it->second.erase(t) == 0) return false;
    if (it->second.empty()) entries_.erase(it);
    return true;
}

const std::set<rdf::Triple>& MaterializationLedger::entries(const std::string& rule) const {
    auto it = entries_.find(rule);
    return it == entries_.end() ? kEmpty : it->second;
}

bool MaterializationLedger::contains(const std::string& rule, const rdf::Triple& t) const {
    return entries(rule).contains(t);
}

std::size_t MaterializationLedger::size(const std::string& rule) const { return entries(rule).size(); }

std::size_t MaterializationLedger::total() const {
    std::size_t n = 0;
    for (const auto& [_, set] : entries_) n += set.size();
    return n;
}

std::vector<std::string> MaterializationLedger::rules() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : entries_) out.push_back(name);
    return out;
}

void MaterializationLedger::clear(const std::string& rule) { entries_.erase(rule); }
void MaterializationLedger::clear() { entries_.clear(); }

void MaterializationLedger::save(std::ostream& out) const {
    out << kMagic << '\n';
    for (const auto& [name, set] : entries_) {
        out << "@rule " << name << ' ' << set.size() << '\n';
        for (const auto& t : set) rdf::write_ntriples_line(t, out);
    }
}

MaterializationLedger MaterializationLedger::load(std::istream& in) {
    MaterializationLedger ledger;
    std::string line;
    if (!std::getline(in, line) || line != kMagic) throw FormatError("not a ledger file (bad header)");
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream header(line);
        std::string tag, name;
        std::size_t count = 0;
        if (!(header >> tag >> name >> count) || tag != "@rule") {
            throw FormatError("ledger line " + std::to_string(line_no) + ": expected '@rule <name> <count>'");
        }
        auto& set = ledger.entries_[name];
        for (std::size_t i = 0; i < count; ++i) {
            if (!std::getline(in, line)) throw FormatError("ledger truncated in rule '" + name + "'");
            ++line_no;
            try {
                auto parsed = rdf::parse_ntriples(std::string_view(line));
                if (parsed.size() != 1) throw FormatError("expected one triple");
                set.insert(std::move(parsed.front()));
            } catch (const Error& e) {
                throw FormatError("ledger line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (set.empty()) ledger.entries_.erase(name);
    }
    return ledger;
}

void MaterializationLedger::save_file(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot write " + tmp);
        save(out);
        if (!out.flush()) throw FormatError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw FormatError("cannot replace " + path);
}

MaterializationLedger MaterializationLedger::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    return load(in);
}

}  // namespace mesur::inference
