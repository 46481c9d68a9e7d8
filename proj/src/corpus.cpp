#include "bugloc/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bugloc/error.hpp"
#include "bugloc/timeutil.hpp"

namespace bugloc {
namespace {

using nlohmann::json;

std::string lower_trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  s = s.substr(b, e - b + 1);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

const char* kRequiredFields[] = {"id",         "project",       "summary",   "description",
                                 "created_at", "status",        "reporter_email",
                                 "comments",   "attachments",   "fix_commits", "fixed_files"};

BugReport parse_record(const json& j, const BugExportSchema& schema) {
  for (const char* f : kRequiredFields)
    if (!j.contains(f)) throw Error("schema-violation", std::string("missing field '") + f + "'");
  if (!schema.allow_unknown_fields) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool known = false;
      for (const char* f : kRequiredFields)
        if (it.key() == f) known = true;
      if (!known) throw Error("schema-violation", "unknown field '" + it.key() + "'");
    }
  }

  BugReport r;
  r.id = j.at("id").get<std::string>();
  r.project = j.at("project").get<std::string>();
  r.summary = j.at("summary").get<std::string>();
  r.description = j.at("description").get<std::string>();
  r.created_at = parse_rfc3339(j.at("created_at").get<std::string>());
  r.status = parse_status(j.at("status").get<std::string>());
  r.reporter_email = j.at("reporter_email").get<std::string>();
  for (const auto& c : j.at("comments")) {
    BugComment bc;
    bc.author_email = c.at("author_email").get<std::string>();
    bc.timestamp = parse_rfc3339(c.at("timestamp").get<std::string>());
    bc.has_patch_attachment = c.at("has_patch_attachment").get<bool>();
    r.comments.push_back(std::move(bc));
  }
  for (const auto& a : j.at("attachments")) {
    BugAttachment ba;
    ba.timestamp = parse_rfc3339(a.at("timestamp").get<std::string>());
    ba.is_patch = a.at("is_patch").get<bool>();
    r.attachments.push_back(ba);
  }
  for (const auto& c : j.at("fix_commits")) {
    CommitRef cr;
    cr.hash = c.at("hash").get<std::string>();
    cr.committer_email = c.at("committer_email").get<std::string>();
    cr.timestamp = parse_rfc3339(c.at("timestamp").get<std::string>());
    for (const auto& f : c.at("touched_files")) cr.touched_files.push_back(f.get<std::string>());
    if (cr.touched_files.empty())
      throw Error("schema-violation", "fix commit with empty touched_files");
    r.fix_commits.push_back(std::move(cr));
  }
  for (const auto& f : j.at("fixed_files")) r.fixed_files.insert(f.get<std::string>());
  return r;
}

}  // namespace

BugStatus parse_status(const std::string& text) {
  const std::string t = lower_trim(text);
  if (t == "resolved") return BugStatus::resolved;
  if (t == "fixed") return BugStatus::fixed;
  if (t == "closed") return BugStatus::closed;
  return BugStatus::other;
}

const char* status_name(BugStatus s) {
  switch (s) {
    case BugStatus::resolved: return "resolved";
    case BugStatus::fixed: return "fixed";
    case BugStatus::closed: return "closed";
    default: return "other";
  }
}

IngestResult ingest_bug_reports(std::istream& in, const BugExportSchema& schema) {
  IngestResult out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      if (!j.is_object()) throw Error("schema-violation", "record is not an object");
      out.reports.push_back(parse_record(j, schema));
    } catch (const json::exception& e) {
      out.errors.push_back({lineno, std::string("invalid json: ") + e.what()});
    } catch (const Error& e) {
      out.errors.push_back({lineno, e.what()});
    }
  }
  return out;
}

CurateResult curate(const std::vector<BugReport>& reports, const ProjectSnapshot& snapshot) {
  CurateResult out;
  for (const BugReport& r : reports) {
    bool missing = r.fixed_files.empty();
    for (const auto& f : r.fixed_files)
      if (snapshot.files.find(f) == snapshot.files.end()) missing = true;
    if (missing) {
      out.dropped.push_back({r, "missing-file"});
      continue;
    }
    if (r.status == BugStatus::other) {
      out.dropped.push_back({r, "status"});
      continue;
    }
    out.kept.push_back(r);
  }
  return out;
}

PrefixSplit filter_prefix(const std::vector<BugReport>& reports) {
  PrefixSplit out;
  for (const BugReport& r : reports) {
    if (r.fix_commits.empty())
      throw Error("uncurated-report", "report '" + r.id + "' has no fix commits");

    bool postfix = false;
    const std::string reporter = lower_trim(r.reporter_email);
    for (const CommitRef& c : r.fix_commits)
      if (!reporter.empty() && lower_trim(c.committer_email) == reporter) postfix = true;

    const std::int64_t deadline = r.created_at + kPatchWindowSeconds;
    for (const BugAttachment& a : r.attachments)
      if (a.is_patch && a.timestamp >= r.created_at && a.timestamp <= deadline) postfix = true;
    for (const BugComment& c : r.comments)
      if (c.has_patch_attachment && c.timestamp >= r.created_at && c.timestamp <= deadline)
        postfix = true;

    (postfix ? out.postfix : out.prefix).push_back(r);
  }
  return out;
}

ProjectSnapshot load_snapshot(const std::string& project, const std::string& root_dir,
                              const std::string& manifest_path) {
  ProjectSnapshot snap;
  snap.project = project;
  std::ifstream manifest(manifest_path);
  if (!manifest) throw Error("missing-file", "cannot open snapshot manifest: " + manifest_path);
  std::string line;
  while (std::getline(manifest, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t");
    const std::string rel = line.substr(b, e - b + 1);
    std::ifstream f(root_dir + "/" + rel, std::ios::binary);
    if (!f) throw Error("missing-file", "manifest entry not found on disk: " + rel);
    std::ostringstream ss;
    ss << f.rdbuf();
    snap.files[rel] = ss.str();
  }
  return snap;
}

std::map<std::string, std::vector<FileHistoryEntry>> parse_history_export(std::istream& in) {
  std::map<std::string, std::vector<FileHistoryEntry>> out;
  std::string line;
  std::string current_path;
  FileHistoryEntry* entry = nullptr;
  enum class Block { none, log, hunk } block = Block::none;

  auto flush_newline = [](std::string& s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("=== ", 0) == 0) {
      current_path = line.substr(4);
      out[current_path];  // a section with no commits still registers the path
      entry = nullptr;
      block = Block::none;
    } else if (line.rfind("--- commit ", 0) == 0) {
      if (current_path.empty())
        throw Error("bad-history", "commit line before any '===' section");
      std::istringstream ss(line.substr(11));
      std::string hash, email, ts;
      ss >> hash >> email >> ts;
      if (hash.empty() || email.empty() || ts.empty())
        throw Error("bad-history", "malformed commit line: " + line);
      parse_rfc3339(ts);  // validates the timestamp
      out[current_path].emplace_back();
      entry = &out[current_path].back();
      block = Block::none;
    } else if (line == "log:") {
      if (!entry) throw Error("bad-history", "log block outside a commit");
      block = Block::log;
    } else if (line == "hunk:") {
      if (!entry) throw Error("bad-history", "hunk block outside a commit");
      if (block == Block::hunk) flush_newline(entry->hunks.back());
      entry->hunks.emplace_back();
      block = Block::hunk;
    } else {
      switch (block) {
        case Block::log:
          entry->commit_log.append(line).push_back('\n');
          break;
        case Block::hunk:
          entry->hunks.back().append(line).push_back('\n');
          break;
        case Block::none:
          if (line.find_first_not_of(" \t") != std::string::npos)
            throw Error("bad-history", "stray content outside blocks: " + line);
      }
    }
  }
  for (auto& [path, entries] : out)
    for (auto& e : entries) {
      flush_newline(e.commit_log);
      for (auto& h : e.hunks) flush_newline(h);
    }
  return out;
}

void attach_history(ProjectSnapshot& snapshot, std::istream& history_export) {
  snapshot.history = parse_history_export(history_export);
}

}  // namespace bugloc
