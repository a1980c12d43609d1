#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace coughlab::exp {

/// Incremental SHA-256.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    Sha256& update(std::span<const unsigned char> bytes);
    Sha256& update(std::string_view text);
    /// Hashes the file contents; throws std::runtime_error if unreadable.
    Sha256& update_file(const std::filesystem::path& path);
    /// Lowercase hex digest. The object cannot be updated afterwards.
    std::string hex();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::string sha256_hex(std::string_view text);
std::string sha256_file(const std::filesystem::path& path);

/// Hash over every regular file below `dir` (relative path + contents, in
/// lexicographic path order), skipping names in `exclude`.
std::string sha256_tree(const std::filesystem::path& dir, std::span<const std::string> exclude = {});

}  // namespace coughlab::exp
