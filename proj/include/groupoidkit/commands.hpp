#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "groupoidkit/checks.hpp"

namespace gk::cli {

/// Stable exit-code contract of the command-line tool.
enum ExitCode : int { kOk = 0, kSemanticFailure = 1, kInputFailure = 2 };

// Every command writes one JSON document to `out`; failures carry an
// "error" field and, where there is one, a "witness".

int cmd_validate(const std::string& path, std::ostream& out);
int cmd_quotient(const std::string& path, const std::vector<std::string>& subgroupoid, std::ostream& out);
int cmd_abelianize(const std::string& path, std::ostream& out);
int cmd_dual(const std::string& path, std::ostream& out);
int cmd_characters(const std::string& path, std::ostream& out);
int cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out);
int cmd_check_corpus(std::uint64_t seed, std::size_t count, int budget, int jobs,
                     const CheckOptions& options, std::ostream& out);

struct GenerateRequest {
  std::string kind;  // trivial, pair, group, bundle, klein-cross, s3-a3, random, abelian-bundle
  int n = 2;
  std::vector<std::string> groups;  // "group": one name; "bundle": point=name entries
  std::uint64_t seed = 0;
  int budget = 20;
  std::size_t count = 1;
};

std::vector<std::string> generator_kinds();
int cmd_generate(const GenerateRequest& request, std::ostream& out);

}  // namespace gk::cli
