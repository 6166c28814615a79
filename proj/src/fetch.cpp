#include "wstream/fetch.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include <openssl/evp.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "wstream/errors.hpp"
#include "wstream/graph.hpp"

namespace wstream {

namespace {

std::uint64_t parse_count(const std::string& token, bool& check,
                          const char* what, std::size_t line_no) {
    if (token == "-") {
        check = false;
        return 0;
    }
    check = true;
    std::uint64_t value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw ParseError(std::string("bad ") + what + " '" + token + "'", line_no);
    }
    return value;
}

} // namespace

std::vector<DatasetSpec> parse_manifest(std::istream& text) {
    std::vector<DatasetSpec> specs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(text, line)) {
        ++line_no;
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::istringstream in(line);
        DatasetSpec spec;
        std::string n_token, m_token, extra;
        if (!(in >> spec.name >> spec.url >> spec.sha256 >> n_token >> m_token)) {
            throw ParseError("expected 'name url sha256 n m'", line_no);
        }
        if (in >> extra) {
            throw ParseError("trailing tokens after 'name url sha256 n m'", line_no);
        }
        spec.n = parse_count(n_token, spec.check_n, "vertex count", line_no);
        spec.m = parse_count(m_token, spec.check_m, "edge count", line_no);
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::vector<DatasetSpec> parse_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return parse_manifest(in);
}

std::string sha256_hex(const void* data, std::size_t size) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int digest_len = 0;
    if (EVP_Digest(data, size, digest, &digest_len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(digest_len * 2);
    for (unsigned int i = 0; i < digest_len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string sha256_hex_of_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("SHA-256 init failed");
    }
    char buffer[1 << 16];
    while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
        if (EVP_DigestUpdate(ctx, buffer, static_cast<std::size_t>(in.gcount())) != 1) {
            EVP_MD_CTX_free(ctx);
            throw Error("SHA-256 update failed");
        }
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int digest_len = 0;
    if (EVP_DigestFinal_ex(ctx, digest, &digest_len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("SHA-256 final failed");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(digest_len * 2);
    for (unsigned int i = 0; i < digest_len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

namespace {

struct ParsedUrl {
    bool https = false;
    std::string host;
    int port = 0;
    std::string path;
};

ParsedUrl parse_url(const std::string& url) {
    ParsedUrl out;
    std::string rest;
    if (url.rfind("https://", 0) == 0) {
        out.https = true;
        rest = url.substr(8);
    } else if (url.rfind("http://", 0) == 0) {
        out.https = false;
        rest = url.substr(7);
    } else {
        throw ConfigError("unsupported URL scheme in '" + url + "'");
    }
    const std::size_t slash = rest.find('/');
    std::string authority = slash == std::string::npos ? rest : rest.substr(0, slash);
    out.path = slash == std::string::npos ? "/" : rest.substr(slash);
    const std::size_t colon = authority.find(':');
    if (colon != std::string::npos) {
        const std::string port_text = authority.substr(colon + 1);
        const auto res = std::from_chars(port_text.data(),
                                         port_text.data() + port_text.size(), out.port);
        if (res.ec != std::errc{} || res.ptr != port_text.data() + port_text.size()) {
            throw ConfigError("bad port in URL '" + url + "'");
        }
        authority = authority.substr(0, colon);
    } else {
        out.port = out.https ? 443 : 80;
    }
    out.host = authority;
    if (out.host.empty()) {
        throw ConfigError("missing host in URL '" + url + "'");
    }
    return out;
}

// Cache filename: manifest name plus the URL's extension chain, so the
// .gz-aware parser sees the right suffix.
std::string cache_filename(const DatasetSpec& spec) {
    const std::size_t slash = spec.url.find_last_of('/');
    const std::string base =
        slash == std::string::npos ? spec.url : spec.url.substr(slash + 1);
    const std::size_t dot = base.find('.');
    return dot == std::string::npos ? spec.name : spec.name + base.substr(dot);
}

bool checksum_ok(const DatasetSpec& spec, const std::filesystem::path& path) {
    if (spec.sha256 == "-") {
        return true;
    }
    return sha256_hex_of_file(path) == spec.sha256;
}

void download_to(const DatasetSpec& spec, const std::filesystem::path& path) {
    const std::string body = http_get(spec.url);
    const std::filesystem::path tmp = path.string() + ".part";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write " + tmp.string());
        }
        out.write(body.data(), static_cast<std::streamsize>(body.size()));
    }
    std::filesystem::rename(tmp, path);
}

void validate_against_manifest(const DatasetSpec& spec,
                               const std::filesystem::path& path) {
    const AdjacencyGraph graph = build_adjacency(parse_edge_list_file(path.string()));
    if (spec.check_n && graph.n() != spec.n) {
        throw DataError(spec.name + ": manifest expects n=" + std::to_string(spec.n) +
                        ", parsed n=" + std::to_string(graph.n()));
    }
    if (spec.check_m && graph.m() != spec.m) {
        throw DataError(spec.name + ": manifest expects m=" + std::to_string(spec.m) +
                        ", parsed m=" + std::to_string(graph.m()));
    }
}

} // namespace

std::string http_get(const std::string& url) {
    const ParsedUrl parsed = parse_url(url);
    auto fetch = [&](auto& client) -> std::string {
        client.set_follow_location(true);
        client.set_connection_timeout(30);
        client.set_read_timeout(120);
        auto res = client.Get(parsed.path);
        if (!res) {
            throw IoError("GET " + url + " failed: " + httplib::to_string(res.error()));
        }
        if (res->status != 200) {
            throw IoError("GET " + url + " returned status " +
                          std::to_string(res->status));
        }
        return res->body;
    };
    if (parsed.https) {
        httplib::SSLClient client(parsed.host, parsed.port);
        client.enable_server_certificate_verification(false);
        return fetch(client);
    }
    httplib::Client client(parsed.host, parsed.port);
    return fetch(client);
}

std::filesystem::path fetch_dataset(const DatasetSpec& spec, const FetchOptions& options) {
    std::filesystem::create_directories(options.cache_dir);
    const std::filesystem::path path = options.cache_dir / cache_filename(spec);

    bool have_file = std::filesystem::exists(path);
    if (have_file && !checksum_ok(spec, path)) {
        if (options.offline) {
            throw DataError(spec.name + ": cached file fails checksum (offline)");
        }
        have_file = false; // corrupted cache entry; re-download once
    }
    if (!have_file) {
        if (options.offline) {
            throw DataError(spec.name + ": not cached and offline mode is set");
        }
        download_to(spec, path);
        if (!checksum_ok(spec, path)) {
            throw DataError(spec.name + ": downloaded file fails checksum");
        }
    }
    if (options.validate_counts) {
        validate_against_manifest(spec, path);
    }
    return path;
}

std::vector<std::filesystem::path> fetch_datasets(const std::vector<DatasetSpec>& specs,
                                                  const FetchOptions& options) {
    std::vector<std::filesystem::path> paths;
    paths.reserve(specs.size());
    for (const DatasetSpec& spec : specs) {
        paths.push_back(fetch_dataset(spec, options));
    }
    return paths;
}

} // namespace wstream
