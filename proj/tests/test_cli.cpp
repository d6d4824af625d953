// End-to-end checks of the command-line tool: exit codes, CSV layout,
// determinism, and the verification report. Takes the binary path as its
// only argument.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;

#define EXPECT(cond)                                                     \
  do {                                                                   \
    if (!(cond)) {                                                       \
      std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++g_failures;                                                      \
    }                                                                    \
  } while (0)

std::string g_binary;
std::filesystem::path g_dir;

int run(const std::string& args, const std::string& log_name = "log.txt") {
  const std::string command =
      g_binary + " " + args + " > " + (g_dir / log_name).string() + " 2>&1";
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<double> fields_of(const std::string& line) {
  std::vector<double> values;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) values.push_back(std::strtod(field.c_str(), nullptr));
  return values;
}

void test_density_roundtrip() {
  const auto out = (g_dir / "density.csv").string();
  EXPECT(run("density --ladder a --z 2,0 --t 0 --out " + out) == 0);
  const std::string first = slurp(out);
  const auto lines = lines_of(first);
  EXPECT(lines.size() == 4002);
  EXPECT(lines[0] == "x,t,rho");

  // identical configuration produces byte-identical output
  EXPECT(run("density --ladder a --z 2,0 --t 0 --out " + out) == 0);
  EXPECT(slurp(out) == first);

  // 17-significant-digit printing round-trips through parsing
  for (std::size_t i = 1; i < lines.size(); i += 977) {
    const auto values = fields_of(lines[i]);
    EXPECT(values.size() == 3);
    char buffer[128];
    std::snprintf(buffer, sizeof(buffer), "%.17g,%.17g,%.17g", values[0], values[1],
                  values[2]);
    EXPECT(lines[i] == buffer);
  }

  // trapezoid integral of the emitted density is unit
  double integral = 0.0;
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const auto a = fields_of(lines[i]);
    const auto b = fields_of(lines[i + 1]);
    integral += 0.5 * (a[2] + b[2]) * (b[0] - a[0]);
  }
  EXPECT(std::fabs(integral - 1.0) < 1e-6);
}

void test_density_multi_time_and_coefficients() {
  const auto out = (g_dir / "field.csv").string();
  const auto coeffs = (g_dir / "coeffs.csv").string();
  EXPECT(run("density --ladder ctilde --mu -3 --z 4,0 --t-samples 3 --nx 401 "
             "--xmin -25 --xmax 25 --out " +
             out + " --coeffs-out " + coeffs) == 0);
  const auto lines = lines_of(slurp(out));
  EXPECT(lines.size() == 1 + 3 * 401);

  const auto coeff_lines = lines_of(slurp(coeffs));
  EXPECT(coeff_lines[0] == "k,nu,log_mag,phase");
  EXPECT(coeff_lines.size() >= 10);
  for (std::size_t k = 0; k + 1 < coeff_lines.size() && k < 5; ++k) {
    const auto values = fields_of(coeff_lines[k + 1]);
    EXPECT(values.size() == 4);
    EXPECT(values[0] == static_cast<double>(k));
    EXPECT(values[1] == -3.0 + 3.0 * static_cast<double>(k));
  }
}

void test_energy_curves() {
  const auto out = (g_dir / "energy.csv").string();
  EXPECT(run("energy --ladder c --mu -3 --zmax 15 --z-samples 6 --out " + out) == 0);
  const auto lines = lines_of(slurp(out));
  EXPECT(lines[0] == "z_abs,energy,closed_form");
  EXPECT(lines.size() == 7);
  const auto first = fields_of(lines[1]);
  EXPECT(std::fabs(first[1] - 0.0) < 1e-12);  // 6 + 2 mu = 0 at mu = -3
  const auto last = fields_of(lines.back());
  EXPECT(last[0] == 15.0);
  EXPECT(last[1] < 675.0);  // far below the linearized family
  EXPECT(std::fabs(last[1] - last[2]) < 1e-8 * last[1]);
}

void test_overlap() {
  const auto out = (g_dir / "overlap.csv").string();
  EXPECT(run("overlap --ladder a --zmax 3 --z-samples 4 --out " + out) == 0);
  const auto lines = lines_of(slurp(out));
  EXPECT(lines[0] == "z_abs,D");
  const auto last = fields_of(lines.back());
  EXPECT(std::fabs(last[1] - std::exp(-9.0)) < 1e-12);
}

void test_cat() {
  const auto out = (g_dir / "cat.csv").string();
  const auto nodal = (g_dir / "nodal.csv").string();
  EXPECT(run("cat --ladder c --mu -3 --z 15,0 --parity odd --t-samples 8 --nx 401 "
             "--out " +
             out + " --nodal-out " + nodal) == 0);
  const auto lines = lines_of(slurp(nodal));
  EXPECT(lines[0] == "t,rho_at_0");
  EXPECT(lines.size() == 9);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT(fields_of(lines[i])[1] <= 1e-10);
  }
}

void test_exit_codes() {
  // configuration errors exit 2
  EXPECT(run("density --ladder c --mu 7 --z 1,0 --out " +
             (g_dir / "x.csv").string()) == 2);
  EXPECT(run("cat --ladder a --z 0,0 --parity odd --out " +
             (g_dir / "x.csv").string()) == 2);
  EXPECT(run("density --z nonsense --out " + (g_dir / "x.csv").string()) == 2);
  EXPECT(run("nonsense") == 2);
  // hitting the truncation cap exits 3
  EXPECT(run("density --ladder a --z 100,0 --kmax 40 --t 0 --out " +
             (g_dir / "x.csv").string()) == 3);
}

void test_verify() {
  const auto report = (g_dir / "report.csv").string();
  EXPECT(run("verify --out " + report, "verify_log.txt") == 0);
  const auto lines = lines_of(slurp(report));
  EXPECT(lines.size() > 30);
  EXPECT(lines[0] == "check,measured,tolerance,status");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT(lines[i].find(",PASS") != std::string::npos);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-reho-binary>\n", argv[0]);
    return 64;
  }
  g_binary = argv[1];
  g_dir = std::filesystem::temp_directory_path() /
          ("reho_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(g_dir);

  test_density_roundtrip();
  test_density_multi_time_and_coefficients();
  test_energy_curves();
  test_overlap();
  test_cat();
  test_exit_codes();
  test_verify();

  std::filesystem::remove_all(g_dir);
  if (g_failures == 0) {
    std::printf("cli: all checks passed\n");
    return 0;
  }
  std::fprintf(stderr, "cli: %d checks failed\n", g_failures);
  return 1;
}
