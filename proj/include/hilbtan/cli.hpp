#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbtan/frames.hpp"
#include "hilbtan/ideal.hpp"

namespace hilbtan {

/// Error in an ideal file, with 1-based line and column.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct FrameLine {
  int a = 2;
  std::optional<int> b;
  bool tweaked = false;
};

/// Line oriented, '#' starts a comment:
///   ring char=<p|0> x=[x1,...,xn] y=[y1,...,ym]
///   gen <polynomial>
///   frame a=<int> [b=<int>] [tweaked=<0|1>]
struct IdealFile {
  RingPtr ring;
  IdealHandle ideal;
  std::optional<FrameLine> frame;
};

IdealFile parse_ideal_file(const std::string& src);
std::string format_ideal_file(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// The base ideal followed by a frame line.
std::string format_frame_spec(const FrameSpec& spec);
FrameSpec parse_frame_spec(const std::string& src);

namespace cli {

/// Exit codes: 0 success, 2 a checked property is false, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli

}  // namespace hilbtan
