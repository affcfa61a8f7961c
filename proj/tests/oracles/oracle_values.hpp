#pragma once
// Generated by generate_oracles.py; do not edit by hand.
namespace oracle {
inline constexpr double kLnGammaRe_3p7_2p1 = 0.78534695807382238876;
inline constexpr double kLnGammaIm_3p7_2p1 = 2.5830129251152622486;
inline constexpr double kLnGammaRe_m2p3_0p4 = -0.40520869521992327572;
inline constexpr double kLnGammaIm_m2p3_0p4 = -8.4562336628709438401;
inline constexpr double kGamma_3p5 = 3.3233509704478425512;
inline constexpr double kDigamma_0p3 = -3.5025242222001331249;
inline constexpr double kDigammaRe_2p5_1 = 0.80977681054404899567;
inline constexpr double kDigammaIm_2p5_1 = 0.45724821012357159033;
inline constexpr double kPochhammer_0p5_7 = 1055.7421875;
inline constexpr double kHyp1f1_0p5_1_3 = 7.3801013214773998648;
inline constexpr double kHyp1f1_0p5_1_m60 = 0.073145946482237293929;
inline constexpr double kHyp1f1_10_1_30 = 5045279368191048536800.0;
inline constexpr double kHyp1f1_m0p5_1_m4 = 2.4036187697641058343;
inline constexpr double kHyp1f1Scaled_0p5_1_250 = 0.035718326731304691662;
inline constexpr double kPhi2_m0p5_0p5_2_m4_m1 = 1.4643278776056182045;
inline constexpr double kLaguerre_5_0p5_2 = 0.43515625;
inline constexpr double kGammaP_2p5_1p7 = 0.36143007689620490988;
inline constexpr double kGammaQ_3_10 = 0.0027693957155115759437;
inline constexpr double kMeijerG1332_a2p5_rho3 = 2.6427393841852428535;
inline constexpr double kMeijerG1222_m0p5_n3_z7 = 1.2764159970243186762;
inline constexpr double kMeijerG1222_ln1p_z2 = 1.0986122886681096914;
inline constexpr double kExpLog1pGamma_2p5_3 = 1.9880080434516347089;
inline constexpr double kArsPdfReal_x3 = 0.087692635698991387631;
inline constexpr double kArsCdfReal_x3 = 0.37658023119734117856;
inline constexpr double kArsPdfInt_x3 = 0.077436294464455458676;
inline constexpr double kArsCdfInt_x3 = 0.27364830227980741425;
inline constexpr double kI3Fig2Eve10dB = 1.6956815201357156437;
}  // namespace oracle
