#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace bugloc {

enum class BugStatus { resolved, fixed, closed, other };

BugStatus parse_status(const std::string& text);  // case-insensitive, unknown -> other
const char* status_name(BugStatus s);

struct CommitRef {
  std::string hash;
  std::string committer_email;
  std::int64_t timestamp = 0;
  std::vector<std::string> touched_files;
};

struct BugComment {
  std::string author_email;
  std::int64_t timestamp = 0;
  bool has_patch_attachment = false;
};

struct BugAttachment {
  std::int64_t timestamp = 0;
  bool is_patch = false;
};

struct BugReport {
  std::string id;
  std::string project;
  std::string summary;
  std::string description;
  std::int64_t created_at = 0;
  BugStatus status = BugStatus::other;
  std::string reporter_email;
  std::vector<BugComment> comments;
  std::vector<BugAttachment> attachments;
  std::vector<CommitRef> fix_commits;
  std::set<std::string> fixed_files;  // ground truth, repo-relative paths
};

// Per-commit slice of a file's history.
struct FileHistoryEntry {
  std::string commit_log;
  std::vector<std::string> hunks;
};

struct ProjectSnapshot {
  std::string project;
  std::map<std::string, std::string> files;  // path -> raw text
  std::map<std::string, std::vector<FileHistoryEntry>> history;
};

// ---------------------------------------------------------------------------
// Ingestion. The bug export is one JSON record per line with exactly the
// fields {id, project, summary, description, created_at, status,
// reporter_email, comments[], attachments[], fix_commits[], fixed_files[]}.
// ---------------------------------------------------------------------------

struct BugExportSchema {
  bool allow_unknown_fields = false;
};

struct IngestError {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct IngestResult {
  std::vector<BugReport> reports;
  std::vector<IngestError> errors;
};

// Malformed records become per-line error entries; well-formed records on
// other lines are unaffected. An empty stream is an empty result.
IngestResult ingest_bug_reports(std::istream& in, const BugExportSchema& schema = {});

// ---------------------------------------------------------------------------
// Curation and pre-fix filtering.
// ---------------------------------------------------------------------------

struct DroppedReport {
  BugReport report;
  std::string reason;  // "missing-file" | "status"
};

struct CurateResult {
  std::vector<BugReport> kept;
  std::vector<DroppedReport> dropped;
};

// Drops reports whose ground-truth files are not all present in the snapshot
// and reports whose status is neither resolved/fixed nor closed.
CurateResult curate(const std::vector<BugReport>& reports, const ProjectSnapshot& snapshot);

struct PrefixSplit {
  std::vector<BugReport> prefix;
  std::vector<BugReport> postfix;
};

// A report is post-fix when the reporter matches any fix committer's email
// (case-insensitive, trimmed) or when a patch arrives within 3600 seconds
// of creation, boundary inclusive. Requires fix_commits to be populated.
PrefixSplit filter_prefix(const std::vector<BugReport>& reports);

// Within-the-hour window for the patch rule, in seconds.
inline constexpr std::int64_t kPatchWindowSeconds = 3600;

// ---------------------------------------------------------------------------
// Snapshot and history loading.
// ---------------------------------------------------------------------------

// Loads a snapshot from a directory tree plus a manifest of repo-relative
// paths (one per line, '#' comments allowed).
ProjectSnapshot load_snapshot(const std::string& project, const std::string& root_dir,
                              const std::string& manifest_path);

// History export format, per file:
//   === <path>
//   --- commit <hash> <committer_email> <rfc3339>
//   log:
//   <free text lines>
//   hunk:
//   <unified-diff hunk body lines>
std::map<std::string, std::vector<FileHistoryEntry>> parse_history_export(std::istream& in);

void attach_history(ProjectSnapshot& snapshot, std::istream& history_export);

}  // namespace bugloc
