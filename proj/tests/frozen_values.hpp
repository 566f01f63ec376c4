// Generated by tests/oracles/gen_frozen_values.py. Do not edit by hand.
#pragma once
#include <vector>
#include <string>

namespace frozen {

inline const std::vector<long> kPhi12 = {1, 0, -1, 0, 1};
inline const std::vector<long> kPhi30 = {1, 1, 0, -1, -1, -1, 0, 1, 1};
inline const std::vector<long> kPhi105 = {1, 1, 1, 0, 0, -1, -1, -2, -1, -1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, -1, 0, -1, 0, -1, 0, -1, 0, -1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, -1, -1, -2, -1, -1, 0, 0, 1, 1, 1};
inline const std::vector<long> kF9Modulus = {1, 0, 1};
inline const std::vector<long> kF25Modulus = {2, 0, 1};
inline const long kF7Generator = 3;
inline const long kF9Generator = 4;
inline const long kF13Generator = 2;
inline const long kF25Generator = 6;
inline const std::vector<long> kF9Trace = {0, 2, 1, 0, 2, 1, 0, 2, 1};
inline const std::vector<long> kF25Trace = {0, 2, 4, 1, 3, 0, 2, 4, 1, 3, 0, 2, 4, 1, 3, 0, 2, 4, 1, 3, 0, 2, 4, 1, 3};
inline const std::vector<std::string> kF7GaussT3Cond42 = {"-1", "-2", "0", "0", "2", "0", "0", "0", "2", "2", "0", "-2"};
inline const std::vector<std::string> kF9GaussT1Cond24 = {"1", "1", "0", "1", "-2", "1", "0", "-2"};
inline const std::vector<std::string> kF7Jacobi12 = {"1", "2"};
inline const std::vector<std::string> kF7Binom21 = {"2/7", "1/7"};
// Greene 2F1(T^2, T^4; eps | x) over F_7, rows x=1..6, conductor 6
inline const std::vector<std::string> kF7Greene21_x1 = {"-1/7", "0"};
inline const std::vector<std::string> kF7Greene21_x2 = {"1/7", "0"};
inline const std::vector<std::string> kF7Greene21_x3 = {"-2/7", "0"};
inline const std::vector<std::string> kF7Greene21_x4 = {"4/7", "0"};
inline const std::vector<std::string> kF7Greene21_x5 = {"-2/7", "0"};
inline const std::vector<std::string> kF7Greene21_x6 = {"1/7", "0"};
inline const std::vector<long> kGamma5Mod5e6 = {1, 15624, 1, 15623, 6, 15601, 24, 15481, 1008, 7561, 10076, 5549, 1461};
inline const long kGamma5HalfMod5e6 = 1068;
inline const long kGamma7HalfMod7e5 = 16806;
inline const long kTeich2Mod5e8 = 280182;
inline const long kTeich3Mod7e6 = 34968;
inline const long kG2P11Arg1Mod11e5 = 1;
inline const long kG2P13ArgSVMod13e5 = 2;
inline const std::vector<long> kMT1LhsP7Mod7e5 = {16799, 16806, 16806, 6, 16806, 6};
inline const std::vector<long> kAffineP7D3 = {1, 1, 7, 1, 7, 7};
inline const std::vector<long> kProjP7D3 = {0, 0, 1, 0, 1, 1};
inline const std::vector<long> kRootsP7D3 = {0, 0, 1, 0, 1, 1};
inline const std::vector<long> kGStdP7D3Mod7e5 = {16806, 16806, 0, 16806, 0, 0};

} // namespace frozen
