#pragma once

#include <stdexcept>
#include <string>

namespace ssc {

enum class Errc {
  InvalidEdge,
  TooSmall,
  BadParams,
  DisconnectedAfterRetries,
  Disconnected,
  GraphDisconnected,
  InvalidLeaders,
  InputTooLarge,
  TableTooLarge,
  TooFewLeaders,
  WrongFamily,
  BadWeights,
  TooLarge,
  Parse,
  Io,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::TooSmall: return "TooSmall";
    case Errc::BadParams: return "BadParams";
    case Errc::DisconnectedAfterRetries: return "DisconnectedAfterRetries";
    case Errc::Disconnected: return "Disconnected";
    case Errc::GraphDisconnected: return "GraphDisconnected";
    case Errc::InvalidLeaders: return "InvalidLeaders";
    case Errc::InputTooLarge: return "InputTooLarge";
    case Errc::TableTooLarge: return "TableTooLarge";
    case Errc::TooFewLeaders: return "TooFewLeaders";
    case Errc::WrongFamily: return "WrongFamily";
    case Errc::BadWeights: return "BadWeights";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ssc
