#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace wstream {

// One manifest entry: name, download URL, expected SHA-256 (lowercase hex,
// or "-" to skip verification), and the expected vertex/edge counts of the
// normalized undirected graph ("-" skips the count check).
struct DatasetSpec {
    std::string name;
    std::string url;
    std::string sha256;           // "-" = unverified
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    bool check_n = true;
    bool check_m = true;
};

struct FetchOptions {
    std::filesystem::path cache_dir = "datasets";
    bool offline = false;
    bool validate_counts = true; // parse after download and compare n/m
};

// Whitespace-separated manifest lines: name url sha256 n m ('#' comments).
std::vector<DatasetSpec> parse_manifest(std::istream& text);
std::vector<DatasetSpec> parse_manifest_file(const std::string& path);

std::string sha256_hex(const void* data, std::size_t size);
std::string sha256_hex_of_file(const std::filesystem::path& path);

// Returns the cached path, downloading when needed. A corrupted cache entry
// is re-downloaded once; a second checksum mismatch raises DataError.
// Offline mode never touches the network.
std::filesystem::path fetch_dataset(const DatasetSpec& spec, const FetchOptions& options);

std::vector<std::filesystem::path> fetch_datasets(const std::vector<DatasetSpec>& specs,
                                                  const FetchOptions& options);

// HTTP(S) GET following redirects; raises IoError on failure.
std::string http_get(const std::string& url);

} // namespace wstream
