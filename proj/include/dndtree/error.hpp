#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dndtree {

enum class errc {
  self_loop,
  out_of_range,
  duplicate_edge,
  edge_absent,
  already_root,
  is_root,
  not_root,
  has_replacements,
  rep_underflow,
  parse_error,
  missing_timestamps,
  k_too_large,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::self_loop: return "self_loop";
    case errc::out_of_range: return "out_of_range";
    case errc::duplicate_edge: return "duplicate_edge";
    case errc::edge_absent: return "edge_absent";
    case errc::already_root: return "already_root";
    case errc::is_root: return "is_root";
    case errc::not_root: return "not_root";
    case errc::has_replacements: return "has_replacements";
    case errc::rep_underflow: return "rep_underflow";
    case errc::parse_error: return "parse_error";
    case errc::missing_timestamps: return "missing_timestamps";
    case errc::k_too_large: return "k_too_large";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace dndtree
