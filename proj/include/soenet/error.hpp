#pragma once

#include <stdexcept>
#include <string>

namespace soenet {

enum class ErrorCode {
  kInvalidArgument = 1,
  kUndefinedResult = 2,
  kFitFailure = 3,
  kNumericalFailure = 4,
  kIo = 5,
  kParse = 6,
  kDependency = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorCode::kInvalidArgument, w) {}
};
struct UndefinedResult : Error {
  explicit UndefinedResult(const std::string& w) : Error(ErrorCode::kUndefinedResult, w) {}
};
struct FitFailure : Error {
  explicit FitFailure(const std::string& w) : Error(ErrorCode::kFitFailure, w) {}
};
struct NumericalFailure : Error {
  explicit NumericalFailure(const std::string& w) : Error(ErrorCode::kNumericalFailure, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::kIo, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::kParse, w) {}
};
struct DependencyError : Error {
  explicit DependencyError(const std::string& w) : Error(ErrorCode::kDependency, w) {}
};

}  // namespace soenet
