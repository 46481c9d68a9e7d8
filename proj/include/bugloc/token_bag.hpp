#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace bugloc {

enum class SourceKind { natural, stacktrace, code };

// Multiset of normalized terms. Iteration order is lexicographic, which keeps
// every downstream computation (indexing, serialization) deterministic.
class TokenBag {
 public:
  TokenBag() = default;
  explicit TokenBag(SourceKind kind) : kind_(kind) {}

  void add(const std::string& token, std::uint32_t n = 1) {
    counts_[token] += n;
    total_ += n;
  }

  void merge(const TokenBag& other) {
    for (const auto& [tok, n] : other.counts_) add(tok, n);
  }

  std::uint32_t count(const std::string& token) const {
    auto it = counts_.find(token);
    return it == counts_.end() ? 0 : it->second;
  }

  bool contains(const std::string& token) const { return counts_.count(token) > 0; }

  bool empty() const { return counts_.empty(); }
  std::size_t distinct() const { return counts_.size(); }
  std::uint64_t total() const { return total_; }
  SourceKind kind() const { return kind_; }

  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

  bool operator==(const TokenBag& other) const { return counts_ == other.counts_; }

 private:
  std::map<std::string, std::uint32_t> counts_;
  std::uint64_t total_ = 0;
  SourceKind kind_ = SourceKind::natural;
};

}  // namespace bugloc
