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


#include "agentaudit/cli.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "agentaudit/agreement.h"
#include "agentaudit/audit.h"
#include "agentaudit/errors.h"
#include "agentaudit/ingest.h"
#include "agentaudit/parallel.h"
#include "agentaudit/report.h"
#include "agentaudit/rulepack.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace agentaudit {
namespace {

class ThresholdExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string rulepack;
  std::string output;
  std::string format;
  bool no_timestamp = false;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  double threshold = 0.25;
  int jobs = 0;
};

void AddCommon(CLI::App* cmd, CommonOptions& o, bool with_output = true) {
  cmd->add_option("--rulepack", o.rulepack, "Rule pack file (default: built-in AutoGen pack)");
  if (with_output) cmd->add_option("-o,--output", o.output, "Write the document to this file");
  cmd->add_option("--format", o.format, "Document format")
      ->check(CLI::IsMember({"structured", "readable"}));
  cmd->add_flag("--no-timestamp", o.no_timestamp, "Omit timestamps for reproducible output");
  cmd->add_option("--include", o.include, "Extra file globs listed as non-host files");
  cmd->add_option("--exclude", o.exclude, "File or directory globs to exclude");
  cmd->add_option("--threshold", o.threshold, "Maximum fraction of files with parse warnings")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("-j,--jobs", o.jobs, "Worker threads (0: runtime default)")
      ->check(CLI::NonNegativeNumber);
}

ReportFormat ChooseFormat(const std::string& requested, const std::string& output, bool terminal) {
  if (requested == "structured") return ReportFormat::kStructured;
  if (requested == "readable") return ReportFormat::kReadable;
  if (!output.empty()) {
    return fs::path(output).extension() == ".json" ? ReportFormat::kStructured
                                                   : ReportFormat::kReadable;
  }
  return terminal ? ReportFormat::kReadable : ReportFormat::kStructured;
}

// Writes through a sibling temporary file so readers never see a partial document.
void WriteFile(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp" + std::to_string(getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw AuditError("cannot write " + path.string());
    f << content;
    if (!f.flush()) throw AuditError("cannot write " + path.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw AuditError("cannot write " + path.string());
  }
}

void Emit(const std::string& document, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << document;
    out.flush();
  } else {
    WriteFile(output, document);
  }
}

RulePack PackFor(const CommonOptions& o) {
  return o.rulepack.empty() ? AutoGenRulePack() : LoadRulePack(o.rulepack);
}

FilterRules FiltersFor(const CommonOptions& o, const RulePack& pack) {
  FilterRules f = FilterRules::ForPack(pack);
  f.include_globs = o.include;
  f.exclude_globs = o.exclude;
  return f;
}

std::string DefaultName(const fs::path& root) {
  std::error_code ec;
  fs::path p = fs::weakly_canonical(root, ec);
  if (ec) p = root;
  std::string name = p.filename().string();
  if (name.empty()) name = p.parent_path().filename().string();
  return name.empty() ? root.string() : name;
}

std::string NameFromUrl(const std::string& url) {
  std::string s = url;
  while (!s.empty() && s.back() == '/') s.pop_back();
  if (s.ends_with(".git")) s.resize(s.size() - 4);
  const auto slash = s.find_last_of("/:");
  return slash == std::string::npos ? s : s.substr(slash + 1);
}

void ReportWarnings(const RepoScorecard& card, std::ostream& err) {
  for (const auto& w : card.warnings) err << "warning: " << card.repo.name << ": " << w << "\n";
  for (const auto& w : card.scan_warnings) {
    err << "warning: " << w.path << ":" << w.line << ":" << w.column << ": " << w.message << "\n";
  }
}

void CheckThreshold(const RepoScorecard& card, double threshold) {
  const double fraction = card.stats.ParseFailureFraction();
  if (fraction > threshold) {
    std::ostringstream msg;
    msg << card.repo.name << ": " << card.stats.files_with_warnings << " of "
        << card.stats.files_scanned << " files have parse warnings (" << std::setprecision(3)
        << fraction << " > threshold " << threshold << ")";
    throw ThresholdExceeded(msg.str());
  }
}

// --- scan -----------------------------------------------------------------

struct ScanOptions {
  CommonOptions common;
  std::string root;
  std::string name;
  std::string manifest;
};

int DoScan(const ScanOptions& o, std::ostream& out, std::ostream& err, bool terminal) {
  const RulePack pack = PackFor(o.common);
  RepoRef repo;
  repo.locator = o.root;
  repo.name = o.name.empty() ? DefaultName(o.root) : o.name;
  const bool timestamps = !o.common.no_timestamp;
  const AuditResult result = AuditTree(o.root, repo, pack, FiltersFor(o.common, pack), timestamps);
  if (!o.manifest.empty()) WriteFile(o.manifest, ManifestToJson(result.manifest).dump(2) + "\n");
  ReportWarnings(result.card, err);
  const ReportFormat format = ChooseFormat(o.common.format, o.common.output, terminal);
  Emit(RenderScorecard(result.card, format, timestamps), o.common.output, out);
  CheckThreshold(result.card, o.common.threshold);
  return kExitOk;
}

// --- fetch ----------------------------------------------------------------

struct FetchOptions {
  CommonOptions common;
  std::string url;
  std::string rev;
  std::string subdir;
  std::string dest;
  std::string name;
  std::string manifest;
};

AuditResult FetchAndAudit(const RepoRef& ref, const fs::path& dest, const RulePack& pack,
                          const FilterRules& filters, bool timestamps) {
  FetchResult fetched = FetchRepository(ref, dest, filters, timestamps);
  return AuditManifest(std::move(fetched.manifest), pack);
}

fs::path FreshTempDir() {
  std::string pattern = (fs::temp_directory_path() / "agentaudit-XXXXXX").string();
  if (!mkdtemp(pattern.data())) throw FetchError("cannot create a temporary directory");
  return pattern;
}

int DoFetch(const FetchOptions& o, std::ostream& out, std::ostream& err, bool terminal) {
  const RulePack pack = PackFor(o.common);
  RepoRef ref;
  ref.locator = o.url;
  if (!o.rev.empty()) ref.revision = o.rev;
  if (!o.subdir.empty()) ref.subdir = o.subdir;
  ref.name = o.name.empty() ? NameFromUrl(o.url) : o.name;
  if (!ref.revision) err << "warning: no --rev given; the result is a non-reproducible snapshot\n";

  const bool temporary = o.dest.empty();
  const fs::path base = temporary ? FreshTempDir() : fs::path(o.dest);
  const fs::path dest = temporary ? base / "checkout" : base;
  struct Cleanup {
    bool active;
    fs::path dir;
    ~Cleanup() {
      std::error_code ec;
      if (active) fs::remove_all(dir, ec);
    }
  } cleanup{temporary, base};

  const bool timestamps = !o.common.no_timestamp;
  const AuditResult result = FetchAndAudit(ref, dest, pack, FiltersFor(o.common, pack), timestamps);
  if (!o.manifest.empty()) WriteFile(o.manifest, ManifestToJson(result.manifest).dump(2) + "\n");
  ReportWarnings(result.card, err);
  const ReportFormat format = ChooseFormat(o.common.format, o.common.output, terminal);
  Emit(RenderScorecard(result.card, format, timestamps), o.common.output, out);
  CheckThreshold(result.card, o.common.threshold);
  return kExitOk;
}

// --- corpus ---------------------------------------------------------------

struct CorpusOptions {
  CommonOptions common;
  std::string list;
  std::string output_dir;
  std::string work_dir;
};

struct CorpusEntry {
  RepoRef ref;
  fs::path local;  // set for local trees
};

std::vector<CorpusEntry> ReadCorpusList(const fs::path& list) {
  std::ifstream in(list);
  if (!in) throw AuditError("cannot read corpus list " + list.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw AuditError(list.string() + ": " + e.what());
  }
  const json& repos = j.is_object() && j.contains("repos") ? j["repos"] : j;
  if (!repos.is_array() || repos.empty()) throw AuditError(list.string() + ": expected a non-empty list of repositories");
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < repos.size(); ++i) {
    const json& r = repos[i];
    const std::string where = list.string() + ": entry " + std::to_string(i + 1);
    if (!r.is_object()) throw AuditError(where + ": expected an object");
    CorpusEntry e;
    auto str = [&](const char* key) -> std::optional<std::string> {
      if (!r.contains(key)) return std::nullopt;
      if (!r[key].is_string()) throw AuditError(where + ": \"" + key + "\" must be a string");
      return r[key].get<std::string>();
    };
    const auto path = str("path");
    const auto url = str("url");
    if (path.has_value() == url.has_value()) throw AuditError(where + ": give exactly one of \"path\" or \"url\"");
    if (path) {
      e.local = fs::path(*path).is_absolute() ? fs::path(*path) : list.parent_path() / *path;
      e.ref.locator = *path;
      e.ref.name = str("name").value_or(DefaultName(e.local));
    } else {
      e.ref.locator = *url;
      e.ref.revision = str("rev");
      e.ref.name = str("name").value_or(NameFromUrl(*url));
    }
    e.ref.subdir = str("subdir");
    out.push_back(std::move(e));
  }
  return out;
}

std::string Slug(const std::string& name) {
  std::string s;
  for (unsigned char c : name) s += std::isalnum(c) || c == '-' || c == '_' || c == '.' ? static_cast<char>(c) : '_';
  return s.empty() ? "repo" : s;
}

int DoCorpus(const CorpusOptions& o, std::ostream& out, std::ostream& err, bool terminal) {
  const RulePack pack = PackFor(o.common);
  const FilterRules filters = FiltersFor(o.common, pack);
  const bool timestamps = !o.common.no_timestamp;
  const std::vector<CorpusEntry> entries = ReadCorpusList(o.list);

  std::optional<fs::path> scratch;
  struct Cleanup {
    std::optional<fs::path>* dir;
    bool keep;
    ~Cleanup() {
      std::error_code ec;
      if (*dir && !keep) fs::remove_all(**dir, ec);
    }
  } cleanup{&scratch, !o.work_dir.empty()};

  std::vector<RepoScorecard> cards;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CorpusEntry& e = entries[i];
    if (!e.local.empty()) {
      fs::path root = e.ref.subdir ? e.local / *e.ref.subdir : e.local;
      cards.push_back(AuditTree(root, e.ref, pack, filters, timestamps).card);
    } else {
      if (!scratch) scratch = o.work_dir.empty() ? FreshTempDir() : fs::path(o.work_dir);
      const fs::path dest = *scratch / (std::to_string(i + 1) + "-" + Slug(e.ref.name));
      cards.push_back(FetchAndAudit(e.ref, dest, pack, filters, timestamps).card);
    }
    ReportWarnings(cards.back(), err);
  }

  const ReportFormat format = ChooseFormat(o.common.format, o.common.output, terminal);
  const std::string matrix = RenderCorpusMatrix(cards, format);
  if (!o.output_dir.empty()) {
    std::error_code ec;
    fs::create_directories(o.output_dir, ec);
    if (ec) throw AuditError("cannot create " + o.output_dir + ": " + ec.message());
    for (std::size_t i = 0; i < cards.size(); ++i) {
      char prefix[24];
      std::snprintf(prefix, sizeof prefix, "%02zu-", i + 1);
      const fs::path doc = fs::path(o.output_dir) / (prefix + Slug(cards[i].repo.name) + ".json");
      WriteFile(doc, RenderScorecard(cards[i], ReportFormat::kStructured, timestamps));
    }
    const std::string ext = format == ReportFormat::kStructured ? ".json" : ".txt";
    WriteFile(fs::path(o.output_dir) / ("matrix" + ext), matrix);
  }
  if (!o.common.output.empty() || o.output_dir.empty()) Emit(matrix, o.common.output, out);
  for (const auto& card : cards) CheckThreshold(card, o.common.threshold);
  return kExitOk;
}

// --- agree ----------------------------------------------------------------

struct AgreeOptions {
  std::string ratings;
  bool per_attribute = false;
  bool average = false;
  std::string output;
  std::string format;
};

std::string Fixed(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(9) << v;
  return s.str();
}

int DoAgree(const AgreeOptions& o, std::ostream& out, std::ostream& err, bool terminal) {
  const RatingsTable table = ReadRatingsFile(o.ratings);
  const ReportFormat format = ChooseFormat(o.format, o.output, terminal);
  json doc = {{"schema_version", "1"},
              {"subjects", table.subjects.size()},
              {"raters", table.raters.size()}};
  std::ostringstream text;
  text << "subjects: " << table.subjects.size() << "\nraters: " << table.raters.size() << "\n";

  std::optional<std::map<Attribute, KappaEntry>> per;
  if (o.per_attribute || o.average) per = PerAttributeAgreement(table);

  int code = kExitOk;
  if (o.average) {
    const double k = AverageKappa(*per);
    doc["method"] = "average";
    doc["kappa"] = k;
    text << "kappa (mean of per-attribute values): " << Fixed(k) << "\n";
  } else {
    try {
      const double k = FleissKappa(BuildMatrix(table));
      doc["method"] = "pooled";
      doc["kappa"] = k;
      text << "kappa (pooled): " << Fixed(k) << "\n";
    } catch (const DegenerateAgreementError& e) {
      if (!o.per_attribute) throw;
      err << "error: pooled kappa: " << e.what() << "\n";
      doc["method"] = "pooled";
      doc["kappa"] = nullptr;
      text << "kappa (pooled): undefined\n";
      code = kExitDegenerate;
    }
  }
  if (o.per_attribute) {
    json entries = json::object();
    text << "\nper attribute:\n";
    std::size_t width = 0;
    for (const auto& [a, entry] : *per) width = std::max(width, AttributeTitle(a).size());
    for (const auto& [a, entry] : *per) {
      const std::string name(AttributeName(a));
      const std::string title(AttributeTitle(a));
      text << "  " << title << std::string(width - title.size() + 2, ' ');
      if (entry.kappa) {
        entries[name] = {{"kappa", *entry.kappa}};
        text << Fixed(*entry.kappa) << "\n";
      } else {
        entries[name] = {{"kappa", nullptr}, {"reason", entry.reason}};
        text << "undefined (" << entry.reason << ")\n";
      }
    }
    doc["per_attribute"] = entries;
  }
  Emit(format == ReportFormat::kStructured ? doc.dump(2) + "\n" : text.str(), o.output, out);
  return code;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool out_is_terminal) {
  CLI::App app{"Static autonomy audit for agent applications", "agentaudit"};
  app.set_config("--config", "", "Read options from a TOML or INI file (flags take precedence)");
  app.require_subcommand(1);
  app.set_version_flag("--version", "agentaudit 1.0.0");

  ScanOptions scan;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Score one local source tree");
  scan_cmd->add_option("root", scan.root, "Directory to scan")->required();
  scan_cmd->add_option("--name", scan.name, "Display name (default: directory name)");
  scan_cmd->add_option("--manifest", scan.manifest, "Also write the file manifest here");
  AddCommon(scan_cmd, scan.common);

  FetchOptions fetch;
  CLI::App* fetch_cmd = app.add_subcommand("fetch", "Fetch a git repository at a revision and score it");
  fetch_cmd->add_option("url", fetch.url, "Repository URL or path")->required();
  fetch_cmd->add_option("--rev", fetch.rev, "Commit hash or tag to pin");
  fetch_cmd->add_option("--subdir", fetch.subdir, "Score only this subdirectory");
  fetch_cmd->add_option("--dest", fetch.dest, "Checkout directory to keep (default: temporary)");
  fetch_cmd->add_option("--name", fetch.name, "Display name");
  fetch_cmd->add_option("--manifest", fetch.manifest, "Also write the file manifest here");
  AddCommon(fetch_cmd, fetch.common);

  CorpusOptions corpus;
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Score the repositories of a corpus list");
  corpus_cmd->add_option("list", corpus.list, "JSON list of repositories")->required();
  corpus_cmd->add_option("--output-dir", corpus.output_dir, "Write per-repository documents and the matrix here");
  corpus_cmd->add_option("--work-dir", corpus.work_dir, "Keep remote checkouts here");
  AddCommon(corpus_cmd, corpus.common);

  AgreeOptions agree;
  CLI::App* agree_cmd = app.add_subcommand("agree", "Fleiss' kappa over a ratings file");
  agree_cmd->add_option("ratings", agree.ratings, "Ratings file (subject,attribute,rater,level)")->required();
  agree_cmd->add_flag("--per-attribute", agree.per_attribute, "Also report kappa per attribute");
  agree_cmd->add_flag("--average", agree.average, "Report the mean of per-attribute kappas instead of the pooled value");
  agree_cmd->add_option("-o,--output", agree.output, "Write the result to this file");
  agree_cmd->add_option("--format", agree.format, "Document format")
      ->check(CLI::IsMember({"structured", "readable"}));

  std::string pack_file;
  std::string pack_output;
  CLI::App* pack_cmd = app.add_subcommand("rulepack", "Rule pack utilities");
  pack_cmd->require_subcommand(1);
  CLI::App* validate_cmd = pack_cmd->add_subcommand("validate", "Check a rule pack file");
  validate_cmd->add_option("file", pack_file, "Rule pack file")->required();
  CLI::App* dump_cmd = pack_cmd->add_subcommand("dump", "Print the built-in AutoGen rule pack");
  dump_cmd->add_option("-o,--output", pack_output, "Write to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (CommonOptions* c : {&scan.common, &fetch.common, &corpus.common}) {
      if (c->jobs > 0) SetKernelThreads(c->jobs);
    }
    if (scan_cmd->parsed()) return DoScan(scan, out, err, out_is_terminal);
    if (fetch_cmd->parsed()) return DoFetch(fetch, out, err, out_is_terminal);
    if (corpus_cmd->parsed()) return DoCorpus(corpus, out, err, out_is_terminal);
    if (agree_cmd->parsed()) return DoAgree(agree, out, err, out_is_terminal);
    if (validate_cmd->parsed()) {
      const RulePack pack = LoadRulePack(pack_file);
      out << pack_file << ": ok (" << pack.Id() << ")\n";
      return kExitOk;
    }
    if (dump_cmd->parsed()) {
      Emit(SerializeRulePack(AutoGenRulePack()), pack_output, out);
      return kExitOk;
    }
    return kExitUsage;
  } catch (const ThresholdExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseFailures;
  } catch (const IngestError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIngest;
  } catch (const DegenerateAgreementError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace agentaudit
