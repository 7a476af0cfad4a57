#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace markov {

// Base type for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
std::string num(double v);
}

// Indices in messages are 1-based; the stored fields are 0-based.
class NegativeEntry : public Error {
 public:
  NegativeEntry(int index, double value)
      : Error("negative entry " + detail::num(value) + " at position " +
              std::to_string(index + 1)),
        row(index) {}
  NegativeEntry(int row_index, int col_index, double value)
      : Error("negative entry " + detail::num(value) + " at row " +
              std::to_string(row_index + 1) + ", column " +
              std::to_string(col_index + 1)),
        row(row_index),
        col(col_index) {}
  int row = 0;
  int col = -1;
};

class SumNotOne : public Error {
 public:
  explicit SumNotOne(double actual_sum)
      : Error("entries sum to " + detail::num(actual_sum) +
              ", expected 1 within 1e-9"),
        actual(actual_sum) {}
  double actual;
};

class RowSumNotOne : public Error {
 public:
  RowSumNotOne(int row_index, double actual_sum)
      : Error("row " + std::to_string(row_index + 1) + " sums to " +
              detail::num(actual_sum) + ", expected 1 within 1e-9"),
        row(row_index),
        actual(actual_sum) {}
  int row;
  double actual;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t expected, std::size_t actual)
      : Error("length mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what)
      : Error("shape mismatch: " + what) {}
};

class InvalidLabel : public Error {
 public:
  explicit InvalidLabel(const std::string& what) : Error(what) {}
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label \"" + label + "\"") {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(int index, int size)
      : Error("index " + std::to_string(index + 1) + " outside space of size " +
              std::to_string(size)) {}
};

class EmptySequence : public Error {
 public:
  explicit EmptySequence(const std::string& what) : Error(what) {}
};

class SplitOutOfRange : public Error {
 public:
  SplitOutOfRange(int split, int length)
      : Error("split point " + std::to_string(split) +
              " not interior to a sequence of length " +
              std::to_string(length)) {}
};

class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(std::uint64_t required_count, std::uint64_t cap_value)
      : Error("enumeration requires " + std::to_string(required_count) +
              " sequences, cap is " + std::to_string(cap_value)),
        required(required_count),
        cap(cap_value) {}
  std::uint64_t required;
  std::uint64_t cap;
};

class ZeroEvidence : public Error {
 public:
  ZeroEvidence() : Error("observed evidence has probability zero") {}
};

class ParseError : public Error {
 public:
  ParseError(int line_number, int column_number, const std::string& reason)
      : Error("parse error at line " + std::to_string(line_number) +
              ", column " + std::to_string(column_number) + ": " + reason),
        line(line_number),
        column(column_number) {}
  int line;
  int column;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& json_path, const std::string& why)
      : Error("schema error at " + json_path + ": " + why),
        path(json_path),
        reason(why) {}
  std::string path;
  std::string reason;
};

}  // namespace markov
