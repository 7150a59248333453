#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

#include "scenval/types.hpp"

namespace testutil {

/// Temporary file that deletes itself; content written on construction.
class TempFile {
 public:
  explicit TempFile(const std::string& content, const std::string& suffix = ".csv") {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("scenval_test_" + std::to_string(counter++) + "_" +
              std::to_string(::getpid()) + suffix))
                .string();
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Temporary directory, removed recursively on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("scenval_dir_" + std::to_string(counter++) + "_" + std::to_string(::getpid())))
                .string();
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline std::vector<double> uniform_values(std::size_t n, std::uint64_t seed, double lo = 0.0,
                                          double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(n);
  for (double& v : out) {
    v = lo + (hi - lo) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
  }
  return out;
}

inline scenval::ScenarioSet random_set(std::size_t n_scenarios, std::size_t n_steps,
                                       std::uint64_t seed, double dt = 0.25) {
  return scenval::make_scenario_set(uniform_values(n_scenarios * n_steps, seed), n_steps, dt);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return out;
}

}  // namespace testutil
