#include "posguess/report_io.hpp"

#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "posguess/error.hpp"
#include "posguess/text.hpp"

namespace posguess {

namespace {

constexpr std::string_view kSweepHeader = "theta\tlexP\tlexR\tlexC\tcorP\tcorR\tcorC\trules";
constexpr std::string_view kEvalHeader =
    "weighting\tprecision\trecall\tcoverage\twords_total\twords_covered";
constexpr std::string_view kTaggingHeader =
    "total_words\tunknown_words\ttotal_mistagged\tunknown_mistagged\ttotal_score\tunknown_score";

// Calls fn(line_no, fields) for each data row after the expected header.
template <class Fn>
void read_table(std::istream& in, std::string_view header, std::size_t columns, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_cr(raw);
    if (trim(line).empty()) continue;
    if (!seen_header) {
      if (line != header) throw ParseError(line_no, "expected header '" + std::string(header) + "'");
      seen_header = true;
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != columns)
      throw ParseError(line_no, "expected " + std::to_string(columns) + " columns");
    try {
      fn(line_no, fields);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!seen_header) throw ParseError(0, "missing header");
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

void write_sweep_tsv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.theta_s) << '\t' << format_double(r.lexicon.precision) << '\t'
        << format_double(r.lexicon.recall) << '\t' << format_double(r.lexicon.coverage) << '\t'
        << format_double(r.corpus.precision) << '\t' << format_double(r.corpus.recall) << '\t'
        << format_double(r.corpus.coverage) << '\t' << r.rule_count << '\n';
  }
}

std::vector<SweepRow> read_sweep_tsv(std::istream& in) {
  std::vector<SweepRow> rows;
  read_table(in, kSweepHeader, 8, [&](std::size_t, const auto& f) {
    SweepRow r;
    r.theta_s = parse_double(f[0]);
    r.lexicon = {parse_double(f[1]), parse_double(f[2]), parse_double(f[3])};
    r.corpus = {parse_double(f[4]), parse_double(f[5]), parse_double(f[6])};
    const auto count = parse_int(f[7]);
    if (count < 0) throw std::invalid_argument("negative rule count");
    r.rule_count = static_cast<std::size_t>(count);
    rows.push_back(r);
  });
  return rows;
}

void write_eval_tsv(std::ostream& out, const std::vector<EvalReport>& reports) {
  out << kEvalHeader << '\n';
  for (const auto& r : reports) {
    out << weighting_name(r.weighting) << '\t' << format_double(r.precision) << '\t'
        << format_double(r.recall) << '\t' << format_double(r.coverage) << '\t'
        << r.words_total << '\t' << r.words_covered << '\n';
  }
}

std::vector<EvalReport> read_eval_tsv(std::istream& in) {
  std::vector<EvalReport> reports;
  read_table(in, kEvalHeader, 6, [&](std::size_t, const auto& f) {
    EvalReport r;
    r.weighting = weighting_from_name(f[0]);
    r.precision = parse_double(f[1]);
    r.recall = parse_double(f[2]);
    r.coverage = parse_double(f[3]);
    r.words_total = parse_int(f[4]);
    r.words_covered = parse_int(f[5]);
    if (r.words_covered < 0 || r.words_covered > r.words_total)
      throw std::invalid_argument("words_covered out of range");
    reports.push_back(r);
  });
  return reports;
}

void write_tagging_tsv(std::ostream& out, const TaggingScore& s) {
  out << kTaggingHeader << '\n'
      << s.total_words << '\t' << s.unknown_words << '\t' << s.total_mistagged << '\t'
      << s.unknown_mistagged << '\t' << format_double(s.total_score) << '\t'
      << format_double(s.unknown_score) << '\n';
}

TaggingScore read_tagging_tsv(std::istream& in) {
  std::optional<TaggingScore> score;
  read_table(in, kTaggingHeader, 6, [&](std::size_t, const auto& f) {
    if (score) throw std::invalid_argument("more than one tagging row");
    score = TaggingScore::from_counts(parse_int(f[0]), parse_int(f[1]), parse_int(f[2]),
                                      parse_int(f[3]));
    if (format_double(score->total_score) != f[4] || format_double(score->unknown_score) != f[5])
      throw std::invalid_argument("scores disagree with counts");
  });
  if (!score) throw ParseError(0, "no tagging row");
  return *score;
}

void write_eval_table(std::ostream& out, const std::vector<EvalReport>& reports) {
  out << "level    precision  recall     coverage   covered/total\n";
  for (const auto& report : reports) {
    const auto* r = &report;
    out << (r->weighting == Weighting::Type ? "lexicon  " : "corpus   ") << fixed6(r->precision)
        << "   " << fixed6(r->recall) << "   " << fixed6(r->coverage) << "   "
        << r->words_covered << '/' << r->words_total;
    if (r->degenerate()) out << "  (nothing covered; precision/recall reported as 0)";
    out << '\n';
  }
}

std::string eval_json(const std::vector<EvalReport>& reports, const TaggingScore* tagging) {
  nlohmann::ordered_json j;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    j["reports"].push_back({{"weighting", weighting_name(r.weighting)},
                            {"precision", r.precision},
                            {"recall", r.recall},
                            {"coverage", r.coverage},
                            {"words_total", r.words_total},
                            {"words_covered", r.words_covered}});
  }
  if (tagging) {
    j["tagging"] = {{"total_words", tagging->total_words},
                    {"unknown_words", tagging->unknown_words},
                    {"total_mistagged", tagging->total_mistagged},
                    {"unknown_mistagged", tagging->unknown_mistagged},
                    {"total_score", tagging->total_score},
                    {"unknown_score", tagging->unknown_score}};
  }
  return j.dump(2);
}

}  // namespace posguess
