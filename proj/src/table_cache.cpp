#include "rigidity/table_cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>

#include "rigidity/weyl.hpp"

namespace rigidity {

namespace {

constexpr const char* kMagic = "rigidity-weight-table 1";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string coords(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += w[i].str();
    }
    return s;
}

std::optional<Weight> parse_coords(const std::string& s) {
    std::vector<Rational> v;
    std::stringstream in(s);
    std::string tok;
    try {
        while (std::getline(in, tok, ',')) v.push_back(Rational::parse(tok));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (v.empty()) return std::nullopt;
    return Weight(std::move(v));
}

bool starts_with(const std::string& line, const std::string& prefix, std::string& rest) {
    if (line.rfind(prefix, 0) != 0) return false;
    rest = line.substr(prefix.size());
    return true;
}

// Does the table look like V_highest of this component? Cheap, but catches
// truncation, bit flips in multiplicities and a table filed under the wrong key.
bool consistent(const WeightMultiplicityTable& t, const RootSystemData& component, const Weight& highest) {
    if (!(t.highest() == highest) || t.highest().size() != component.rank()) return false;
    if (t.multiplicity(highest) != 1) return false;
    for (const auto& [w, m] : t.entries()) {
        if (w.size() != component.rank() || m <= 0 || !w.is_integral()) return false;
        if (t.multiplicity(dominant_representative(w, component)) != m) return false;
    }
    return t.total_dimension() == weyl_dim(highest, component);
}

}  // namespace

std::string serialize_table(const std::string& key, const WeightMultiplicityTable& table) {
    std::string out = std::string(kMagic) + "\n";
    out += "key " + key + "\n";
    out += "highest " + coords(table.highest()) + "\n";
    out += "entries " + std::to_string(table.entries().size()) + "\n";
    for (const auto& [w, m] : table.entries()) out += coords(w) + " " + std::to_string(m) + "\n";
    return out;
}

std::optional<std::pair<std::string, WeightMultiplicityTable>> parse_table(const std::string& text) {
    std::stringstream in(text);
    std::string line, rest, key;
    if (!std::getline(in, line) || line != kMagic) return std::nullopt;
    if (!std::getline(in, line) || !starts_with(line, "key ", key)) return std::nullopt;
    if (!std::getline(in, line) || !starts_with(line, "highest ", rest)) return std::nullopt;
    auto highest = parse_coords(rest);
    if (!highest) return std::nullopt;
    if (!std::getline(in, line) || !starts_with(line, "entries ", rest)) return std::nullopt;
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        n = std::stoull(rest, &used);
        if (used != rest.size()) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    std::vector<std::pair<Weight, std::int64_t>> entries;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line)) return std::nullopt;
        const auto sp = line.find(' ');
        if (sp == std::string::npos) return std::nullopt;
        auto w = parse_coords(line.substr(0, sp));
        if (!w || w->size() != highest->size()) return std::nullopt;
        std::int64_t m = 0;
        try {
            std::size_t used = 0;
            const std::string ms = line.substr(sp + 1);
            m = std::stoll(ms, &used);
            if (used != ms.size()) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (!entries.empty() && !(entries.back().first < *w)) return std::nullopt;
        entries.emplace_back(std::move(*w), m);
    }
    if (std::getline(in, line)) return std::nullopt;  // trailing garbage
    try {
        return std::make_pair(key, WeightMultiplicityTable(std::move(*highest), std::move(entries)));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

FileTableStore::FileTableStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_, ec)) {
        writable_ = false;
        warnings_.push_back("cache directory " + dir_.string() + " is unusable; caching disabled");
    }
}

std::filesystem::path FileTableStore::path_for(const std::string& key) const {
    char name[32];
    std::snprintf(name, sizeof name, "wt-%016llx.txt", static_cast<unsigned long long>(fnv1a(key)));
    return dir_ / name;
}

std::optional<WeightMultiplicityTable> FileTableStore::lookup(const std::string& key, const RootSystemData& component,
                                                              const Weight& highest) {
    if (!writable_) return std::nullopt;
    const auto path = path_for(key);
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::stringstream buf;
    buf << f.rdbuf();
    auto parsed = parse_table(buf.str());
    if (parsed && parsed->first != key) return std::nullopt;  // hash collision: another key owns the slot
    bool ok = false;
    if (parsed) {
        try {
            ok = consistent(parsed->second, component, highest);
        } catch (const std::exception&) {
            ok = false;
        }
    }
    if (!ok) {
        warnings_.push_back("ignoring corrupt cache entry " + path.string() + " for " + key + "; recomputing");
        return std::nullopt;
    }
    return std::move(parsed->second);
}

void FileTableStore::store(const std::string& key, const WeightMultiplicityTable& table) {
    if (!writable_) return;
    static std::atomic<unsigned> counter{0};
    const auto path = path_for(key);
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << serialize_table(key, table);
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            writable_ = false;
            warnings_.push_back("cannot write to cache directory " + dir_.string() + "; caching disabled");
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        warnings_.push_back("cannot publish cache entry " + path.string() + ": " + ec.message());
    }
}

}  // namespace rigidity
