// Command-line front end: difference-set sequence generation, correlation
// spectra, multiplier groups and family verification.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycloseq/cycloseq.hpp"
#include "cycloseq/report_io.hpp"

namespace {

using namespace cycloseq;
using nlohmann::json;

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw CLI::ValidationError("--format", "expected one of text|json|csv");
}

// Arguments for correlate/multipliers may be literals or file paths; a
// literal that parses is taken as-is, otherwise the argument is read as a
// file whose stripped contents are parsed.
std::string load_argument(const std::string& arg, bool (*looks_literal)(const std::string&),
                          const char* kind) {
  if (looks_literal(arg)) return arg;
  if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
      text.pop_back();
    return text;
  }
  throw ParseError(std::string("'") + arg + "' is neither a " + kind +
                   " literal nor a readable file");
}

bool bitstring_literal(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c != '0' && c != '1') return false;
  return true;
}

bool support_literal(const std::string& s) { return s.rfind("N=", 0) == 0; }

json support_to_json(const SupportSet& s) {
  json members = json::array();
  for (u64 m : s.members()) members.push_back(m);
  return members;
}

struct GeneratedSequence {
  FamilyDescriptor descriptor;
  SupportSet support;
  std::optional<u64> alpha;  // sextic generator actually used
};

GeneratedSequence generate(Family family, u64 q, unsigned index, std::optional<u64> alpha) {
  switch (family) {
    case Family::paley: {
      if (index > 1) throw BadPairError("generate: paley conjugate index must be 0 or 1");
      auto descriptor = describe_family(family, q);
      return {descriptor, index == 0 ? paley_set(q) : paley_conjugate(q), std::nullopt};
    }
    case Family::twin_prime: {
      if (index > 1) throw BadPairError("generate: twinprime conjugate index must be 0 or 1");
      auto descriptor = describe_family(family, q);
      return {descriptor, index == 0 ? twin_prime_set(q) : twin_prime_conjugate(q),
              std::nullopt};
    }
    case Family::hall: {
      if (index > 5) throw BadPairError("generate: hall conjugate index must be 0..5");
      auto construction = hall_set(q, alpha);
      FamilyDescriptor descriptor{Family::hall, q, construction.x, q, (q - 1) / 2, (q - 3) / 4};
      std::vector<u64> members;
      for (std::size_t c : {index % 6, (index + 1) % 6, (index + 3) % 6}) {
        const auto& cls = construction.system.cyclotomic_class(c);
        members.insert(members.end(), cls.begin(), cls.end());
      }
      return {descriptor, SupportSet(q, std::move(members)), construction.system.generator()};
    }
  }
  throw std::logic_error("generate: unknown family");
}

int cmd_generate(const std::string& family_arg, u64 q, unsigned index,
                 std::optional<u64> alpha, OutputFormat format) {
  const auto family = family_from_name(family_arg);
  if (!family) {
    std::cerr << "error: unknown family '" << family_arg << "' (expected paley|twinprime|hall)\n";
    return 2;
  }
  if (alpha && *family != Family::hall) {
    std::cerr << "error: --alpha applies to the hall family only\n";
    return 2;
  }
  const auto generated = generate(*family, q, index, alpha);
  const auto sequence = characteristic_sequence(generated.support);

  switch (format) {
    case OutputFormat::text: {
      std::cout << "family: " << family_name(generated.descriptor.family) << "\n"
                << "q: " << generated.descriptor.q << "\n"
                << "v: " << generated.descriptor.v << "\n"
                << "k: " << generated.descriptor.k << "\n"
                << "lambda: " << generated.descriptor.lambda << "\n";
      if (generated.descriptor.x) std::cout << "x: " << generated.descriptor.x->x << "\n";
      if (generated.alpha) std::cout << "alpha: " << *generated.alpha << "\n";
      std::cout << "index: " << index << "\n"
                << "support: " << generated.support.str() << "\n"
                << "sequence: " << sequence.str() << "\n";
      return 0;
    }
    case OutputFormat::json: {
      json j{{"family", std::string(family_name(generated.descriptor.family))},
             {"q", generated.descriptor.q},
             {"v", generated.descriptor.v},
             {"k", generated.descriptor.k},
             {"lambda", generated.descriptor.lambda},
             {"x", nullptr},
             {"alpha", nullptr},
             {"index", index},
             {"modulus", generated.support.modulus()},
             {"support", support_to_json(generated.support)},
             {"sequence", sequence.str()}};
      if (generated.descriptor.x) j["x"] = generated.descriptor.x->x;
      if (generated.alpha) j["alpha"] = *generated.alpha;
      std::cout << j.dump() << "\n";
      return 0;
    }
    case OutputFormat::csv: {
      std::cout << "i,bit\n";
      for (u64 i = 0; i < sequence.period(); ++i)
        std::cout << i << "," << unsigned{sequence.bits()[i]} << "\n";
      return 0;
    }
  }
  return 2;
}

int cmd_correlate(const std::string& a_arg, const std::optional<std::string>& b_arg,
                  OutputFormat format) {
  const BinarySequence s = BinarySequence::parse(load_argument(a_arg, bitstring_literal, "bitstring"));
  const bool auto_mode = !b_arg.has_value();
  const BinarySequence t =
      auto_mode ? s : BinarySequence::parse(load_argument(*b_arg, bitstring_literal, "bitstring"));
  const CorrelationSpectrum spectrum = correlation_spectrum(s, t);

  switch (format) {
    case OutputFormat::text: {
      std::cout << "period: " << s.period() << "\n" << "correlation:\n";
      for (u64 w = 0; w < spectrum.values.size(); ++w)
        std::cout << w << " " << spectrum.values[w] << "\n";
      std::cout << "histogram:\n";
      for (const auto& [value, count] : spectrum.histogram)
        std::cout << value << " " << count << "\n";
      if (auto_mode)
        std::cout << "perfect: " << (is_perfect(s) ? "true" : "false") << "\n";
      return 0;
    }
    case OutputFormat::json: {
      json histogram = json::object();
      for (const auto& [value, count] : spectrum.histogram)
        histogram[std::to_string(value)] = count;
      json j{{"period", s.period()}, {"values", spectrum.values}, {"histogram", histogram}};
      if (auto_mode) j["perfect"] = is_perfect(s);
      std::cout << j.dump() << "\n";
      return 0;
    }
    case OutputFormat::csv: {
      std::cout << "w,value\n";
      for (u64 w = 0; w < spectrum.values.size(); ++w)
        std::cout << w << "," << spectrum.values[w] << "\n";
      return 0;
    }
  }
  return 2;
}

int cmd_multipliers(const std::string& support_arg, OutputFormat format) {
  const SupportSet d = SupportSet::parse(load_argument(support_arg, support_literal, "support-set"));
  const MultiplierGroup group = multiplier_group(d);
  const auto orbit = decimation_orbit(d);
  const u64 cosets = euler_phi(d.modulus()) / group.members.size();

  switch (format) {
    case OutputFormat::text: {
      std::cout << "N: " << d.modulus() << "\n" << "multipliers:";
      for (std::size_t i = 0; i < group.members.size(); ++i)
        std::cout << (i == 0 ? " " : ",") << group.members[i];
      std::cout << "\n"
                << "order: " << group.members.size() << "\n"
                << "cosets: " << cosets << "\n"
                << "orbit:\n";
      for (const auto& entry : orbit)
        std::cout << "r=" << entry.representative << " " << entry.conjugate.str() << "\n";
      return 0;
    }
    case OutputFormat::json: {
      json orbit_json = json::array();
      for (const auto& entry : orbit)
        orbit_json.push_back(json{{"representative", entry.representative},
                                  {"conjugate", support_to_json(entry.conjugate)}});
      json j{{"N", d.modulus()},
             {"multipliers", group.members},
             {"order", group.members.size()},
             {"cosets", cosets},
             {"orbit", orbit_json}};
      std::cout << j.dump() << "\n";
      return 0;
    }
    case OutputFormat::csv: {
      std::cout << "kind,value\n";
      for (u64 m : group.members) std::cout << "multiplier," << m << "\n";
      std::cout << "order," << group.members.size() << "\n"
                << "cosets," << cosets << "\n";
      for (const auto& entry : orbit)
        std::cout << "conjugate_r" << entry.representative << ",\"" << entry.conjugate.str()
                  << "\"\n";
      return 0;
    }
  }
  return 2;
}

int cmd_verify(const std::string& family_arg, const std::string& range_arg,
               OutputFormat format) {
  const auto family = family_from_name(family_arg);
  if (!family) {
    std::cerr << "error: unknown family '" << family_arg << "' (expected paley|twinprime|hall)\n";
    return 2;
  }
  const auto dots = range_arg.find("..");
  if (dots == std::string::npos) {
    std::cerr << "error: range must have the form a..b\n";
    return 2;
  }
  u64 lo = 0, hi = 0;
  try {
    lo = std::stoull(range_arg.substr(0, dots));
    hi = std::stoull(range_arg.substr(dots + 2));
  } catch (const std::exception&) {
    std::cerr << "error: range must have the form a..b\n";
    return 2;
  }
  if (lo > hi) {
    std::cerr << "error: empty range " << lo << ".." << hi << "\n";
    return 2;
  }

  std::vector<VerificationReport> reports;
  u64 instances = 0;
  for (u64 q = lo; q <= hi; ++q) {
    if (!is_family_admissible(*family, q)) continue;
    ++instances;
    auto family_reports = verify_family(*family, q);
    reports.insert(reports.end(), std::make_move_iterator(family_reports.begin()),
                   std::make_move_iterator(family_reports.end()));
  }

  u64 total_mismatches = 0;
  const VerificationReport* first_failure = nullptr;
  for (const auto& r : reports) {
    total_mismatches += r.mismatch_count;
    if (!r.passed() && first_failure == nullptr) first_failure = &r;
  }

  switch (format) {
    case OutputFormat::text: {
      for (const auto& r : reports) std::cout << to_text(r) << "\n";
      std::cout << "instances: " << instances << "\n"
                << "reports: " << reports.size() << "\n"
                << "mismatches: " << total_mismatches << "\n";
      break;
    }
    case OutputFormat::json: {
      json j = json::array();
      for (const auto& r : reports) j.push_back(to_json(r));
      std::cout << j.dump() << "\n";
      break;
    }
    case OutputFormat::csv: {
      std::cout << "family,q,x,pair_i,pair_j,mismatches,distinct,status\n";
      for (const auto& r : reports) {
        std::cout << family_name(r.descriptor.family) << "," << r.descriptor.q << ",";
        if (r.descriptor.x) std::cout << r.descriptor.x->x;
        std::cout << "," << r.pair.first << "," << r.pair.second << "," << r.mismatch_count
                  << "," << r.distinct_values << "," << status_string(r) << "\n";
      }
      break;
    }
  }

  if (first_failure != nullptr) {
    const auto& r = *first_failure;
    for (u64 w = 0; w < r.predicted.size(); ++w) {
      if (r.predicted[w] != r.computed[w]) {
        std::cerr << "first diff: family=" << family_name(r.descriptor.family)
                  << " q=" << r.descriptor.q << " pair=[" << r.pair.first << ","
                  << r.pair.second << "] w=" << w << " predicted=" << r.predicted[w]
                  << " computed=" << r.computed[w] << "\n";
        break;
      }
    }
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclotomic difference-set sequences: generation, correlation and verification"};
  app.require_subcommand(1);

  std::string format_name = "text";

  auto* cmd_gen = app.add_subcommand("generate", "emit a family sequence and its descriptor");
  std::string gen_family;
  u64 gen_q = 0;
  unsigned gen_index = 0;
  std::optional<u64> gen_alpha;
  cmd_gen->add_option("family", gen_family, "paley|twinprime|hall")->required();
  cmd_gen->add_option("q", gen_q, "family prime")->required();
  cmd_gen->add_option("--index", gen_index, "conjugate index (default 0)");
  cmd_gen->add_option("--alpha", gen_alpha, "primitive-root override (hall)");
  cmd_gen->add_option("--format", format_name, "text|json|csv");

  auto* cmd_corr = app.add_subcommand("correlate", "cross/auto-correlation spectrum");
  std::string corr_a;
  std::optional<std::string> corr_b;
  cmd_corr->add_option("a", corr_a, "bitstring or file")->required();
  cmd_corr->add_option("b", corr_b, "bitstring or file (omit for autocorrelation)");
  cmd_corr->add_option("--format", format_name, "text|json|csv");

  auto* cmd_mult = app.add_subcommand("multipliers", "multiplier group and decimation orbit");
  std::string mult_support;
  cmd_mult->add_option("support", mult_support, "support set text (\"N=15: 0,1,...\") or file")
      ->required();
  cmd_mult->add_option("--format", format_name, "text|json|csv");

  auto* cmd_ver = app.add_subcommand("verify", "check closed-form spectra against brute force");
  std::string ver_family;
  std::string ver_range_pos, ver_range_flag;
  cmd_ver->add_option("family", ver_family, "paley|twinprime|hall")->required();
  cmd_ver->add_option("q_range", ver_range_pos, "inclusive prime range a..b");
  cmd_ver->add_option("--range", ver_range_flag, "inclusive prime range a..b");
  cmd_ver->add_option("--format", format_name, "text|json|csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputFormat format = parse_format(format_name);
    if (cmd_gen->parsed()) return cmd_generate(gen_family, gen_q, gen_index, gen_alpha, format);
    if (cmd_corr->parsed()) return cmd_correlate(corr_a, corr_b, format);
    if (cmd_mult->parsed()) return cmd_multipliers(mult_support, format);
    if (cmd_ver->parsed()) {
      if (ver_range_pos.empty() && ver_range_flag.empty()) {
        std::cerr << "error: verify needs a range (positional a..b or --range a..b)\n";
        return 2;
      }
      if (!ver_range_pos.empty() && !ver_range_flag.empty() && ver_range_pos != ver_range_flag) {
        std::cerr << "error: conflicting ranges given\n";
        return 2;
      }
      return cmd_verify(ver_family, ver_range_pos.empty() ? ver_range_flag : ver_range_pos,
                        format);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cycloseq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
