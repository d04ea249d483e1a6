#include "orbit_cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "adjorbit/pipeline.hpp"

namespace adjorbit::cli {

namespace {

struct RunConfig {
  std::string family = "sl";
  std::size_t size = 0;
  std::string element;
  std::uint64_t seed = 42;
  std::size_t samples = 10;
  std::string out;
};

std::string read_element(const std::string& source) {
  if (!source.empty() && source.front() == '{') return source;
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::Parse, "cannot read element file '" + source + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnsupportedAlgebra:
      return kParseError;
    case ErrorKind::NotInAlgebra:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotSquare:
      return kNotInAlgebra;
    case ErrorKind::WitnessNotFound:
      return kWitnessFailure;
    case ErrorKind::ZeroElement:
    case ErrorKind::ZeroSemisimplePart:
      return kZeroElement;
    default:
      return kInternal;
  }
}

void add_options(CLI::App& sub, RunConfig& config) {
  sub.add_option("--family", config.family, "sl, so or sp")
      ->check(CLI::IsMember({"sl", "so", "sp"}))
      ->capture_default_str();
  sub.add_option("--size", config.size, "matrix size n")->required();
  sub.add_option("--element", config.element, "element JSON file, or inline JSON")->required();
  sub.add_option("--seed", config.seed, "sampling seed")->capture_default_str();
  sub.add_option("--samples", config.samples, "random chart samples")->capture_default_str();
  sub.add_option("--out", config.out, "write JSON here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact adjoint-orbit charts and verification", "orbit"};
  app.require_subcommand(1);
  RunConfig config;
  for (const char* name : {"analyze", "chart", "verify", "classify"}) {
    add_options(*app.add_subcommand(name), config);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, err, err);
    return code == 0 ? kOk : kParseError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const LieAlgebra L = build_classical(parse_family(config.family), config.size);
    const RatMatrix m = parse_element(read_element(config.element));
    if (m.rows() != L.ambient_size() || m.cols() != L.ambient_size()) {
      throw Error(ErrorKind::NotInAlgebra, "element is " + std::to_string(m.rows()) + "x" +
                                               std::to_string(m.cols()) + " but " + L.label() + " needs " +
                                               std::to_string(L.ambient_size()) + "x" +
                                               std::to_string(L.ambient_size()));
    }
    const LieElement x = L.element(m);

    Json result;
    int code = kOk;
    if (command == "analyze") {
      result = analyze(L, x);
    } else if (command == "chart") {
      result = chart(L, x, config.seed);
    } else if (command == "verify") {
      const VerificationReport report = verify(L, x, config.seed, config.samples);
      result = to_json(report);
      if (!report.overall_pass()) {
        code = kCheckFailed;
        for (const auto& c : report.checks)
          if (!c.pass) err << "orbit: check failed: " << c.name << "\n";
      }
    } else {
      result = classify(L, x);
    }

    const std::string text = result.dump(2) + "\n";
    if (config.out.empty()) {
      out << text;
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file || !(file << text)) {
        err << "orbit: cannot write '" << config.out << "'\n";
        return kInternal;
      }
    }
    return code;
  } catch (const Error& e) {
    err << "orbit: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "orbit: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace adjorbit::cli
