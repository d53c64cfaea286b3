#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/reps.hpp"

namespace rigidity {

/// Weight tables on disk, one text file per key.
///
/// The file name is a hash of the key, but the key itself is stored in the
/// file and compared byte for byte, so a collision is just a miss. A damaged
/// or inconsistent file is reported as a warning and recomputed; a directory
/// that cannot be written degrades to no caching, also with a warning.
class FileTableStore final : public TableStore {
public:
    explicit FileTableStore(std::filesystem::path dir);

    std::optional<WeightMultiplicityTable> lookup(const std::string& key, const RootSystemData& component,
                                                  const Weight& highest) override;
    void store(const std::string& key, const WeightMultiplicityTable& table) override;

    [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }
    [[nodiscard]] std::filesystem::path path_for(const std::string& key) const;
    [[nodiscard]] const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    std::filesystem::path dir_;
    bool writable_ = true;
    std::vector<std::string> warnings_;
};

/// Canonical text form; `parse_table` returns nullopt on any malformed input.
[[nodiscard]] std::string serialize_table(const std::string& key, const WeightMultiplicityTable& table);
[[nodiscard]] std::optional<std::pair<std::string, WeightMultiplicityTable>> parse_table(const std::string& text);

}  // namespace rigidity
