#include <cmath>

#include <gtest/gtest.h>

#include "gqfi/sensing.hpp"

using namespace gqfi;

namespace {

ResonatorSpec with_amplitude(ResonatorSpec s, double meters) {
    s.drive = DriveAmplitude{meters};
    return s;
}

}  // namespace

TEST(AlphaFromAmplitude, UnitAndChaste) {
    const double m = 3e-22, w = 2.0 * constants::pi * 1.865e9;
    EXPECT_NEAR(alpha_from_amplitude(std::sqrt(2.0 * constants::hbar / (m * w)), m, w), 1.0, 1e-14);
    EXPECT_NEAR(alpha_from_amplitude(10e-9, m, w), 1291.03168605343544, 1e-8);
    EXPECT_THROW(alpha_from_amplitude(0.0, m, w), DomainError);
}

TEST(DeltaM, Scaling) {
    ResonatorSpec s;
    s.mass = 2.0;
    s.omega = 1.0;
    EXPECT_NEAR(delta_m_min(s, 4.0, 1.0), 2.0, 1e-15);
    EXPECT_NEAR(delta_m_min(s, 4.0, 100.0), 0.2, 1e-15);
    EXPECT_THROW(delta_m_min(s, 0.0, 1.0), DomainError);
}

TEST(Sensitivity, ChastePipeline) {
    const auto rep = sensitivity(with_amplitude(chaste2012(), 10e-9));
    EXPECT_NEAR(rep.nbar, 44.19166444603914, 1e-9);
    EXPECT_NEAR(rep.alpha, 1291.03168605343544, 1e-8);
    EXPECT_EQ(rep.g, 1e-3);
    EXPECT_NEAR(rep.t_max, rep.tau_max / chaste2012().omega, 1e-24);
    EXPECT_NEAR(rep.sens, rep.delta_m * std::sqrt(rep.t_max), 1e-40);
    // Order of one proton mass.
    EXPECT_GT(rep.delta_m / constants::proton_mass, 0.3);
    EXPECT_LT(rep.delta_m / constants::proton_mass, 3.0);
    EXPECT_GT(rep.t_max, 135e-9);
    EXPECT_LT(rep.t_max, 540e-9);
    EXPECT_GT(rep.sens / constants::electron_mass, 0.4);
    EXPECT_LT(rep.sens / constants::electron_mass, 1.6);
}

TEST(Sensitivity, HalfQConvention) {
    auto spec = with_amplitude(chaste2012(), 10e-9);
    spec.convention = DampingConvention::inverse_two_q;
    const auto rep = sensitivity(spec);
    EXPECT_EQ(rep.g, 5e-4);
    EXPECT_NEAR(rep.t_max, 272e-9, 3e-9);
}

TEST(Sensitivity, ShotsAndDirectAlpha) {
    auto spec = chaste2012();
    spec.drive = DriveAlpha{1000.0};
    const auto one = sensitivity(spec);
    spec.shots = 100.0;
    EXPECT_NEAR(sensitivity(spec).delta_m / one.delta_m, 0.1, 1e-12);
    EXPECT_NEAR(one.alpha, 1000.0, 0.0);
}

TEST(Sensitivity, MissingDriveIsAnError) {
    EXPECT_THROW(sensitivity(jensen2008()), DomainError);
    auto bad = with_amplitude(jensen2008(), 10e-9);
    bad.quality = 0.0;
    EXPECT_THROW(sensitivity(bad), DomainError);
}

TEST(Presets, Registry) {
    ASSERT_EQ(resonator_presets().size(), 2u);
    EXPECT_TRUE(find_preset("chaste2012").has_value());
    EXPECT_EQ(find_preset("jensen2008")->temperature, 300.0);
    EXPECT_FALSE(find_preset("unknown").has_value());
    EXPECT_NEAR(thermal_occupancy(jensen2008().omega, jensen2008().temperature), 19028.3759277533453, 1e-6);
}
