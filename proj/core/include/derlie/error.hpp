#ifndef DERLIE_ERROR_HPP
#define DERLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace derlie {

/// Error with a stable machine-readable code (surfaced by the CLI as exit
/// status 2 together with the code name).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* DimensionMismatch = "DimensionMismatch";
inline constexpr const char* InhomogeneousImage = "InhomogeneousImage";
inline constexpr const char* NotSeparable = "NotSeparable";
inline constexpr const char* NotACycle = "NotACycle";
inline constexpr const char* BaseNotOddSphere = "BaseNotOddSphere";
inline constexpr const char* CutoffTooSmall = "CutoffTooSmall";
inline constexpr const char* CutoffInsufficient = "CutoffInsufficient";
inline constexpr const char* NotPure = "NotPure";
inline constexpr const char* NotF0 = "NotF0";
inline constexpr const char* NotAKSExtension = "NotAKSExtension";
inline constexpr const char* UnmappedGenerator = "UnmappedGenerator";
inline constexpr const char* CommutativityFailure = "CommutativityFailure";
inline constexpr const char* UnknownName = "UnknownName";
inline constexpr const char* BadRange = "BadRange";
}  // namespace errc

}  // namespace derlie

#endif
