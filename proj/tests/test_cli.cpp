#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "cli_commands.hpp"

using namespace gqfi;
using namespace gqfi::cli;

namespace {

std::string render(const Table& t, Format f) {
    std::ostringstream os;
    write_table(os, t, f);
    return os.str();
}

double value_of(const Table& t, const std::string& quantity) {
    for (const auto& row : t.rows)
        if (std::get<std::string>(row[0]) == quantity) return std::get<double>(row[1]);
    throw std::runtime_error("missing " + quantity);
}

int run_cli(const std::string& args, std::string* out = nullptr) {
    const std::string path = ::testing::TempDir() + "gqfi_cli_out.txt";
    const std::string cmd = std::string(GQFI_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (out) {
        std::ifstream is(path);
        std::stringstream ss;
        ss << is.rdbuf();
        *out = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Parse, Angles) {
    EXPECT_DOUBLE_EQ(parse_angle("pi"), constants::pi);
    EXPECT_DOUBLE_EQ(parse_angle("-pi/2"), -constants::pi / 2.0);
    EXPECT_DOUBLE_EQ(parse_angle("2pi"), 2.0 * constants::pi);
    EXPECT_DOUBLE_EQ(parse_angle("0.5*pi"), 0.5 * constants::pi);
    EXPECT_DOUBLE_EQ(parse_angle("1.25"), 1.25);
    EXPECT_THROW(parse_angle("pi/0"), UsageError);
    EXPECT_THROW(parse_angle("x"), UsageError);
}

TEST(Parse, Grid) {
    const auto g = parse_grid("0:60:600");
    ASSERT_EQ(g.size(), 600u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 60.0);
    EXPECT_EQ(parse_grid("2:2:1"), std::vector<double>{2.0});
    EXPECT_THROW(parse_grid("0:1"), UsageError);
    EXPECT_THROW(parse_grid("1:0:5"), UsageError);
    EXPECT_THROW(parse_grid("0:1:2.5"), UsageError);
}

TEST(Parse, Length) {
    EXPECT_DOUBLE_EQ(parse_length("10nm"), 10e-9);
    EXPECT_DOUBLE_EQ(parse_length("3 um"), 3e-6);
    EXPECT_DOUBLE_EQ(parse_length("2e-9"), 2e-9);
    EXPECT_THROW(parse_length("10 furlongs"), UsageError);
}

TEST(Output, CsvAndJsonl) {
    Table t;
    t.columns = {"name", "value", "ok"};
    t.rows.push_back({std::string("a,b"), 0.1, true});
    EXPECT_EQ(render(t, Format::csv), "name,value,ok\n\"a,b\",0.10000000000000001,true\n");
    EXPECT_EQ(render(t, Format::jsonl), "{\"name\":\"a,b\",\"value\":0.1,\"ok\":true}\n");
    EXPECT_THROW(parse_format("xml"), UsageError);
}

TEST(Qfi, CoherentSweepRows) {
    QfiArgs a;
    a.params = GaussianParams{1.0, 0.0, 0.0, 0.0, 0.0};
    a.g = 0.1;
    a.nbar = 5.0;
    a.tau = parse_grid("0:60:600");
    const Table t = cmd_qfi(a, 2);
    ASSERT_EQ(t.rows.size(), 600u);
    EXPECT_EQ(t.columns[1], "omega2_qfi");
    const double tau = std::get<double>(t.rows[123][0]);
    EXPECT_DOUBLE_EQ(std::get<double>(t.rows[123][1]), qfi_omega_coherent(1.0, 0.1, 5.0, tau, 1.0));
}

TEST(Qfi, EnginesAgree) {
    QfiArgs a;
    a.params = GaussianParams{1.0, 0.0, 0.5, constants::pi, 10.0};
    a.subject = Subject::gamma;
    a.g = 0.1;
    a.nbar = 1.0;
    a.tau = {5.0, 20.0};
    a.step = 1e-4;
    a.richardson = true;
    const Table closed = cmd_qfi(a);
    a.engine = Engine::numeric;
    const Table numeric = cmd_qfi(a);
    for (std::size_t i = 0; i < 2; ++i) {
        const double c = std::get<double>(closed.rows[i][1]);
        EXPECT_NEAR(std::get<double>(numeric.rows[i][1]) / c, 1.0, 1e-6);
    }
}

TEST(Qfi, UsageErrors) {
    QfiArgs a;
    a.tau = {1.0};
    a.mode = OccupancyMode::fixed;
    EXPECT_THROW(cmd_qfi(a), UsageError);
    a.mode = OccupancyMode::temperature;
    a.subject = Subject::gamma;
    EXPECT_THROW(cmd_qfi(a), UsageError);
    a.subject = Subject::omega;
    a.tau = {-1.0};
    EXPECT_THROW(cmd_qfi(a), UsageError);
}

TEST(Qfi, PhysicalUnits) {
    QfiArgs a;
    a.params = GaussianParams{1.0, 0.0, 0.0, 0.0, 0.0};
    a.g = 0.1;
    a.physical_omega = 2.0;
    a.tau = {1.5};
    const Table t = cmd_qfi(a);
    EXPECT_EQ(t.columns[0], "t");
    EXPECT_DOUBLE_EQ(std::get<double>(t.rows[0][1]), std::get<double>(t.rows[0][2]) / 4.0);
    EXPECT_DOUBLE_EQ(std::get<double>(t.rows[0][2]), qfi_omega_coherent(1.0, 0.1, 0.0, 3.0, 1.0));
}

TEST(Omt, Cases) {
    OmtArgs a;
    a.g = 0.1;
    a.nbar = 5.0;
    const Table coh = cmd_omt(a);
    EXPECT_LT(std::get<double>(coh.rows[0][4]), 0.02);
    a.kind = "squeezed";
    EXPECT_NEAR(std::get<double>(cmd_omt(a).rows[0][2]), 15.936, 1e-3);
    a.kind = "gamma-displaced";
    EXPECT_NEAR(std::get<double>(cmd_omt(a).rows[0][2]), 20.0, 1e-12);
    EXPECT_NEAR(std::get<double>(cmd_omt(a).rows[0][3]), 20.0, 1e-5);
    a.kind = "coherent-rescaled";
    a.envelope = true;
    EXPECT_LT(std::get<double>(cmd_omt(a).rows[0][4]), 1e-6);
    a.kind = "nonsense";
    EXPECT_THROW(cmd_omt(a), UsageError);
}

TEST(Sense, ChasteReport) {
    SenseArgs a;
    a.preset = "chaste2012";
    a.amplitude = parse_length("10nm");
    const Table t = cmd_sense(a);
    EXPECT_NEAR(value_of(t, "nbar"), 44.19166444603914, 1e-9);
    EXPECT_GT(value_of(t, "delta_m_proton"), 0.3);
    EXPECT_LT(value_of(t, "delta_m_proton"), 3.0);
}

TEST(Sense, MissingAmplitudeNamesTheGap) {
    SenseArgs a;
    a.preset = "jensen2008";
    try {
        cmd_sense(a);
        FAIL() << "expected UsageError";
    } catch (const UsageError& e) {
        EXPECT_NE(std::string(e.what()).find("no drive amplitude"), std::string::npos);
    }
    a.preset = "nope";
    EXPECT_THROW(cmd_sense(a), UsageError);
}

TEST(Validate, ReductionsAndClosedVsNumeric) {
    for (const auto& row : run_validation(ValidateArgs{"reductions", 3, 30}, 1)) EXPECT_TRUE(row.pass()) << row.name;
    for (const auto& row : run_validation(ValidateArgs{"closed-vs-numeric", 3, 10}, 2)) EXPECT_TRUE(row.pass()) << row.name;
    EXPECT_THROW(run_validation(ValidateArgs{"everything", 1, 0}, 1), UsageError);
}

TEST(Validate, GaussianVsFockSeedSeven) {
    for (const auto& row : run_validation(ValidateArgs{"gaussian-vs-fock", 7, 2}, 2)) EXPECT_TRUE(row.pass()) << row.name;
}

TEST(Binary, ExitCodesAndDeterminism) {
    std::string a, b;
    EXPECT_EQ(run_cli("qfi omega --alpha 1 --g 0.1 --nbar 5 --tau 0:60:50", &a), 0);
    EXPECT_EQ(run_cli("qfi omega --alpha 1 --g 0.1 --nbar 5 --tau 0:60:50", &b), 0);
    EXPECT_EQ(a, b);
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 51);
    EXPECT_EQ(run_cli("qfi omega --tau 1:0:5"), 2);
    EXPECT_EQ(run_cli("sense --preset jensen2008"), 2);
    EXPECT_EQ(run_cli("sense --preset chaste2012 --amplitude 10nm --format jsonl", &a), 0);
    EXPECT_NE(a.find("\"quantity\":\"delta_m_proton\""), std::string::npos);
    EXPECT_EQ(run_cli("validate --scope reductions --seed 7 --cases 5"), 0);
    EXPECT_NE(run_cli("no-such-command"), 0);
}
