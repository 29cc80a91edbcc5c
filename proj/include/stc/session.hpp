#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stc/kempe.hpp"

namespace stc {

// Event-sourced: current == replay(initial, undo).
struct Session {
  std::string id;
  std::string label;
  Coloring initial;
  Coloring current;
  std::vector<ReductionStep> undo;
  std::vector<ReductionStep> redo;
  std::chrono::system_clock::time_point created;
  std::chrono::system_clock::time_point updated;
  std::mutex mu;  // serializes mutations of this session
};

class SessionStore {
 public:
  // With a directory, every session is written there as trace JSON and reloaded on start.
  explicit SessionStore(std::optional<std::filesystem::path> persist_dir = {});

  std::shared_ptr<Session> create(const Coloring& initial, const std::string& label);
  std::shared_ptr<Session> get(const std::string& id) const;
  std::vector<std::string> ids() const;
  void persist(const Session& s) const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  int next_ = 1;
  std::optional<std::filesystem::path> dir_;
};

// Callers hold s.mu.
ReductionStep session_apply(Session& s, MoveKind kind, const Mcap& path);
void session_undo(Session& s);
void session_redo(Session& s);

}  // namespace stc
