#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "hldecomp/errors.hpp"

// Cache layout: <dir>/<fnv1a64(key)>.json holding the key on the first line
// and the decomposition JSON after it. The stored key guards against hash
// collisions and stale formats.

namespace hldecomp::cli {

namespace fs = std::filesystem;

namespace {

std::string file_name(const std::string& key) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h << ".json";
  return os.str();
}

}  // namespace

std::optional<GradedDecomposition> cache_lookup(const std::string& dir, const std::string& key,
                                                std::ostream& warn) {
  const fs::path path = fs::path(dir) / file_name(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    warn << "warning: cache file " << path.string() << " is unreadable; recomputing\n";
    return std::nullopt;
  }
  std::string stored_key;
  std::getline(in, stored_key);
  if (stored_key != key) {
    warn << "warning: cache file " << path.string() << " belongs to another job; recomputing\n";
    return std::nullopt;
  }
  std::stringstream body;
  body << in.rdbuf();
  try {
    return decomposition_from_json(body.str());
  } catch (const Error& e) {
    warn << "warning: ignoring corrupt cache file " << path.string() << " (" << e.what()
         << "); recomputing\n";
    return std::nullopt;
  }
}

bool cache_store(const std::string& dir, const std::string& key, const GradedDecomposition& dec,
                 std::ostream& warn) {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path target = fs::path(dir) / file_name(key);
  const fs::path tmp = fs::path(dir) / (".tmp-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(counter++) + "-" + file_name(key));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << key << '\n' << to_json(dec);
    out.flush();
    if (!out) {
      warn << "warning: cannot write cache file in " << dir << "; continuing without cache\n";
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    warn << "warning: cannot store cache file " << target.string() << " (" << ec.message()
         << "); continuing without cache\n";
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

}  // namespace hldecomp::cli
