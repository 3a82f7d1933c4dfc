// Copyright 2026 The agentaudit Authors.
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

#ifndef AGENTAUDIT_ERRORS_H_
#define AGENTAUDIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace agentaudit {

// Root of every error the library throws. The CLI maps subclasses onto
// exit codes, so each concrete failure mode gets its own type.
class AuditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IngestError : public AuditError {
 public:
  using AuditError::AuditError;
};

// Network or transport failure while acquiring a remote repository.
class FetchError : public IngestError {
 public:
  using IngestError::IngestError;
};

// The remote was reachable but the requested revision does not exist.
class RevisionError : public IngestError {
 public:
  using IngestError::IngestError;
};

class RulePackError : public AuditError {
 public:
  using AuditError::AuditError;
};

class RatingsFormatError : public AuditError {
 public:
  using AuditError::AuditError;
};

class IncompleteRatingsError : public RatingsFormatError {
 public:
  using RatingsFormatError::RatingsFormatError;
};

// Fleiss' kappa is undefined when every rating falls in one category.
class DegenerateAgreementError : public AuditError {
 public:
  using AuditError::AuditError;
};

}  // namespace agentaudit

#endif  // AGENTAUDIT_ERRORS_H_
