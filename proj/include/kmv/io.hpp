#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kmv/error.hpp"

namespace kmv {

// FNV-1a 64-bit over raw file bytes; cheap transcription-integrity check.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Resolve the data directory: explicit argument, then KMV_DATA_DIR, then
// the compiled-in default.
inline std::filesystem::path data_dir(const std::string& override_dir = "") {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("KMV_DATA_DIR")) return env;
#ifdef KMV_DEFAULT_DATA_DIR
    return KMV_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

// MANIFEST holds "name hex-checksum" lines for every golden file.
inline std::map<std::string, std::uint64_t> load_manifest(const std::filesystem::path& dir) {
    std::istringstream in(read_file(dir / "MANIFEST"));
    std::map<std::string, std::uint64_t> out;
    std::string name, hex;
    while (in >> name >> hex) out[name] = std::stoull(hex, nullptr, 16);
    return out;
}

struct GoldenFile {
    std::string name;
    std::string content;
    std::uint64_t checksum = 0;
};

// Load a golden file and verify it against the manifest entry.
inline GoldenFile load_golden(const std::filesystem::path& dir, const std::string& name) {
    GoldenFile g;
    g.name = name;
    g.content = read_file(dir / name);
    g.checksum = fnv1a64(g.content);
    auto manifest = load_manifest(dir);
    auto it = manifest.find(name);
    if (it == manifest.end()) throw DataError("golden file not in MANIFEST: " + name);
    if (it->second != g.checksum)
        throw DataError("golden file checksum mismatch: " + name);
    return g;
}

// Split into logical lines, dropping blanks and '#' comments.
inline std::vector<std::string> data_lines(const std::string& content) {
    std::vector<std::string> out;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.push_back(line);
    }
    return out;
}

} // namespace kmv
