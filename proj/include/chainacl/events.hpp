// Copyright 2026 the chainacl authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHAINACL_EVENTS_HPP
#define CHAINACL_EVENTS_HPP

#include <chrono>
#include <condition_variable>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "chainacl/tx.hpp"

namespace chainacl {

struct EventFilter {
  std::optional<Address> emitter;
  std::optional<std::string> name;

  bool matches(const Event& e) const {
    if (emitter && e.emitter != *emitter) return false;
    if (name && e.name != *name) return false;
    return true;
  }
};

// Ordered, thread-safe queue of immutable events. Subscribers see every
// matching event from blocks accepted after they attached, exactly once,
// in block order then execution order.
class EventStream {
 public:
  void push(const Event& e);
  std::optional<Event> tryNext();
  // Blocks up to `timeout`; nullopt on expiry.
  std::optional<Event> waitNext(std::chrono::milliseconds timeout);
  std::vector<Event> drain();
  size_t pending() const;

 private:
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Event> q_;
};

class EventHub {
 public:
  std::shared_ptr<EventStream> subscribe(EventFilter filter);
  void publish(const Event& e);

 private:
  std::mutex mu_;
  std::vector<std::pair<EventFilter, std::shared_ptr<EventStream>>> subs_;
};

}  // namespace chainacl

#endif  // CHAINACL_EVENTS_HPP
