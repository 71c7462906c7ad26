// Copyright 2026 The Rootscope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROOTSCOPE_ERRORS_H_
#define ROOTSCOPE_ERRORS_H_

#include <complex>
#include <stdexcept>
#include <string>

namespace rootscope {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation (a pole, a branch
// point, an out-of-range degree, a non-finite input).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Both terms of a difference exceed double range, so the difference cannot
// be formed. Callers should switch to the logarithmic form.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class IncompleteRootSetError : public Error {
 public:
  IncompleteRootSetError(int n, int found)
      : Error("incomplete root set for n=" + std::to_string(n) + ": found " +
              std::to_string(found) + " of " + std::to_string(n + 1) +
              " roots"),
        n_(n),
        found_(found) {}

  int n() const { return n_; }
  int found() const { return found_; }

 private:
  int n_;
  int found_;
};

// Root counts disagree with the positive/negative/non-real split the family
// must have. Indicates a solver defect rather than bad input.
class ClassificationMismatchError : public Error {
 public:
  using Error::Error;
};

class MappingViolation : public Error {
 public:
  MappingViolation(const std::string& what, std::complex<double> point)
      : Error(what), point_(point) {}

  std::complex<double> point() const { return point_; }

 private:
  std::complex<double> point_;
};

}  // namespace rootscope

#endif  // ROOTSCOPE_ERRORS_H_
