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

#include <doctest.h>

#include <random>

#include "chainacl/contracts/acc.hpp"
#include "chainacl/contracts/jc.hpp"
#include "chainacl/world.hpp"
#include "support/alg1_reference.hpp"

using namespace chainacl;

namespace {

// Small harness: one subject, one object, one ACC wired to a JC.
struct AccRig {
  World world;
  Address subject;
  Address object;
  Address outsider;
  Address jc;
  Address acc;
  uint64_t nonce = 0;

  explicit AccRig(int64_t base = 2, int64_t interval = 3, int64_t unit = 60)
      : world(World(11)) {
    subject = world.createAccount();
    object = world.createAccount();
    outsider = world.createAccount();
    jc = world.deployContract(object, JudgeContract::kKind,
                              {Value(base), Value(interval), Value(unit)});
    acc = world.deployContract(object, AccessControlContract::kKind,
                               {Value(subject), Value(object)});
    REQUIRE(call(object, "setJC", {Value(jc)}).ok);
  }

  Receipt call(const Address& sender, const std::string& abi, ValueList args) {
    Transaction tx = Transaction::make(sender, acc, abi, std::move(args), 0, ++nonce);
    return world.execTransaction(tx, 1, 0);
  }

  Receipt addPolicy(const std::string& resource, const std::string& action,
                    const std::string& permission, int64_t minInterval,
                    int64_t threshold) {
    return call(object, "policyAdd",
                {Value(resource), Value(action), Value(permission),
                 Value(minInterval), Value(threshold)});
  }

  Receipt request(const Address& caller, const std::string& resource,
                  const std::string& action, int64_t time) {
    return call(caller, "accessControl",
                {Value(resource), Value(action), Value(time)});
  }

  const AccessControlContract& view() const {
    const auto* c = world.contractAs<AccessControlContract>(acc);
    REQUIRE(c != nullptr);
    return *c;
  }
};

}  // namespace

TEST_CASE("policyAdd stores the row and is creator-gated") {
  AccRig rig;
  REQUIRE(rig.addPolicy("file A", "read", "allow", 100, 2).ok);

  const Policy* p = rig.view().policy("file A", "read");
  REQUIRE(p != nullptr);
  CHECK(p->allow);
  CHECK(p->minInterval == 100);
  CHECK(p->threshold == 2);
  CHECK(p->timeOfLastRequest == 0);
  CHECK(p->frequentRequests == 0);
  const ResourceState* rs = rig.view().resourceState("file A");
  REQUIRE(rs != nullptr);
  CHECK(rs->timeOfUnblock == 0);

  // getPolicy echoes the stored fields.
  ValueList row = rig.world.callReadOnly(rig.subject, rig.acc, "getPolicy",
                                         {Value("file A"), Value("read")});
  REQUIRE(row.size() == 7);
  CHECK(row[0].asStr() == "file A");
  CHECK(row[2].asStr() == "allow");
  CHECK(row[4].asInt() == 100);

  Digest before = rig.world.digest();
  Receipt denied = rig.call(rig.outsider, "policyAdd",
                            {Value("file B"), Value("read"), Value("allow"),
                             Value(10), Value(1)});
  CHECK_FALSE(denied.ok);
  CHECK(denied.code == ErrCode::PermissionDenied);
  CHECK(rig.world.digest() == before);

  Receipt dup = rig.addPolicy("file A", "read", "deny", 5, 1);
  CHECK_FALSE(dup.ok);
  CHECK(dup.code == ErrCode::DuplicatePolicy);
}

TEST_CASE("policyUpdate replaces listed fields and keeps counters") {
  AccRig rig;
  REQUIRE(rig.addPolicy("file A", "write", "deny", 100, 2).ok);
  // Take one request so ToLR is non-zero, then update.
  REQUIRE(rig.request(rig.subject, "file A", "write", 1000).ok);

  Receipt upd = rig.call(rig.object, "policyUpdate",
                         {Value("file A"), Value("write"), Value("allow"),
                          Value(-1), Value(-1)});
  REQUIRE(upd.ok);
  const Policy* p = rig.view().policy("file A", "write");
  CHECK(p->allow);
  CHECK(p->minInterval == 100);       // untouched
  CHECK(p->timeOfLastRequest == 1000);  // untouched by update

  // Static check now passes.
  Receipt r = rig.request(rig.subject, "file A", "write", 2000);
  CHECK(r.returnValues.at(0).asBool());

  Receipt missing = rig.call(rig.object, "policyUpdate",
                             {Value("nope"), Value("write"), Value("allow"),
                              Value(-1), Value(-1)});
  CHECK_FALSE(missing.ok);
  CHECK(missing.code == ErrCode::NoSuchPolicy);

  Receipt denied = rig.call(rig.subject, "policyUpdate",
                            {Value("file A"), Value("write"), Value("deny"),
                             Value(-1), Value(-1)});
  CHECK(denied.code == ErrCode::PermissionDenied);

  // Update to a smaller minInterval changes the frequency judgement.
  Receipt upd2 = rig.call(rig.object, "policyUpdate",
                          {Value("file A"), Value("write"), Value(std::string()),
                           Value(10), Value(-1)});
  REQUIRE(upd2.ok);
  CHECK(rig.view().policy("file A", "write")->minInterval == 10);
}

TEST_CASE("policyDelete removes one row, leaves siblings, re-add starts fresh") {
  AccRig rig;
  REQUIRE(rig.addPolicy("file A", "read", "allow", 100, 2).ok);
  REQUIRE(rig.addPolicy("file A", "write", "deny", 100, 2).ok);
  REQUIRE(rig.request(rig.subject, "file A", "read", 1000).ok);

  REQUIRE(rig.call(rig.object, "policyDelete", {Value("file A"), Value("read")}).ok);
  CHECK(rig.view().policy("file A", "read") == nullptr);
  CHECK(rig.view().policy("file A", "write") != nullptr);

  // Deleted pair now yields the unknown-policy outcome: result=false with
  // the event still emitted.
  Receipt r = rig.request(rig.subject, "file A", "read", 2000);
  REQUIRE(r.ok);
  CHECK_FALSE(r.returnValues.at(0).asBool());
  CHECK(r.returnValues.at(1).asInt() == 0);
  REQUIRE(r.events.size() == 1);
  CHECK(r.events[0].name == "returnResult");

  // Re-adding resets ToLR and NoFR to zero.
  REQUIRE(rig.addPolicy("file A", "read", "allow", 100, 2).ok);
  const Policy* p = rig.view().policy("file A", "read");
  CHECK(p->timeOfLastRequest == 0);
  CHECK(p->frequentRequests == 0);

  Receipt missing = rig.call(rig.object, "policyDelete", {Value("ghost"), Value("x")});
  CHECK(missing.code == ErrCode::NoSuchPolicy);
}

TEST_CASE("setJC validates the target kind") {
  AccRig rig;
  Receipt notJc = rig.call(rig.object, "setJC", {Value(rig.acc)});
  CHECK_FALSE(notJc.ok);
  CHECK(notJc.code == ErrCode::NotAJc);

  Receipt denied = rig.call(rig.subject, "setJC", {Value(rig.jc)});
  CHECK(denied.code == ErrCode::PermissionDenied);
}

TEST_CASE("the spec trace: two rapid requests trip the threshold") {
  AccRig rig;  // base=2, interval=3, unit=60
  REQUIRE(rig.addPolicy("data", "read", "allow", 100, 2).ok);

  struct Step {
    int64_t t;
    bool result;
    int64_t penalty;
  };
  // Frozen from the straight-line reference model (verified by hand):
  // (1000,true,0) (1050,true,0) (1080,false,60) blocked until 1140,
  // (1100,false,0) inside the window, (1200,true,0) after the reset.
  const Step steps[] = {
      {1000, true, 0}, {1050, true, 0}, {1080, false, 60},
      {1100, false, 0}, {1200, true, 0},
  };
  for (const Step& s : steps) {
    CAPTURE(s.t);
    Receipt r = rig.request(rig.subject, "data", "read", s.t);
    REQUIRE(r.ok);
    CHECK(r.returnValues.at(0).asBool() == s.result);
    CHECK(r.returnValues.at(1).asInt() == s.penalty);
    REQUIRE(r.events.size() == 1);
    CHECK(r.events[0].payload.at(0).asBool() == s.result);
    CHECK(r.events[0].payload.at(1).asInt() == s.penalty);
  }

  const ResourceState* rs = rig.view().resourceState("data");
  REQUIRE(rs != nullptr);
  CHECK(rs->timeOfUnblock == 0);  // reset by the t=1200 request
  REQUIRE(rs->misbehaviors.size() == 1);
  CHECK(rs->misbehaviors[0].time == 1080);
  CHECK(rs->misbehaviors[0].penaltySeconds == 60);
  CHECK(rs->misbehaviors[0].misbehavior ==
        "frequent-request resource=data action=read noFR=2");

  // ToLR advanced even for the blocked t=1100 request, then to 1200.
  CHECK(rig.view().policy("data", "read")->timeOfLastRequest == 1200);
}

TEST_CASE("deny policies fail the static check without misbehavior") {
  AccRig rig;
  REQUIRE(rig.addPolicy("program A", "execute", "deny", 100, 2).ok);
  for (int64_t t : {1000, 2000, 3000}) {
    Receipt r = rig.request(rig.subject, "program A", "execute", t);
    REQUIRE(r.ok);
    CHECK_FALSE(r.returnValues.at(0).asBool());
    CHECK(r.returnValues.at(1).asInt() == 0);
  }
  CHECK(rig.view().resourceState("program A")->misbehaviors.empty());
}

TEST_CASE("object-forwarded requests decide exactly like subject calls") {
  AccRig direct;
  AccRig forwarded;
  REQUIRE(direct.addPolicy("data", "read", "allow", 100, 2).ok);
  REQUIRE(forwarded.addPolicy("data", "read", "allow", 100, 2).ok);

  for (int64_t t : {1000, 1050, 1080, 1100, 1200}) {
    Receipt a = direct.request(direct.subject, "data", "read", t);
    Receipt b = forwarded.request(forwarded.object, "data", "read", t);
    REQUIRE(a.ok);
    REQUIRE(b.ok);
    CHECK(a.returnValues.at(0).asBool() == b.returnValues.at(0).asBool());
    CHECK(a.returnValues.at(1).asInt() == b.returnValues.at(1).asInt());
  }
}

TEST_CASE("unauthorized callers are rejected without an event") {
  AccRig rig;
  REQUIRE(rig.addPolicy("data", "read", "allow", 100, 2).ok);
  Receipt r = rig.request(rig.outsider, "data", "read", 1000);
  CHECK_FALSE(r.ok);
  CHECK(r.code == ErrCode::UnauthorizedCaller);
  CHECK(r.events.empty());
}

TEST_CASE("accessControl aborts when the judge is unset or destroyed") {
  World world(13);
  Address subject = world.createAccount();
  Address object = world.createAccount();
  Address acc = world.deployContract(object, AccessControlContract::kKind,
                                     {Value(subject), Value(object)});
  auto call = [&](const std::string& abi, ValueList args, uint64_t n) {
    return world.execTransaction(
        Transaction::make(subject, acc, abi, std::move(args), 0, n), 1, 0);
  };

  Receipt unset = call("accessControl", {Value("r"), Value("a"), Value(1000)}, 1);
  CHECK_FALSE(unset.ok);
  CHECK(unset.code == ErrCode::JcUnset);

  // Wire a judge, destroy it, then trip the misbehavior path.
  Address jc = world.deployContract(object, JudgeContract::kKind,
                                    {Value(2), Value(3), Value(60)});
  REQUIRE(world
              .execTransaction(Transaction::make(object, acc, "setJC",
                                                 {Value(jc)}, 0, 2),
                               1, 0)
              .ok);
  REQUIRE(world
              .execTransaction(Transaction::make(object, acc, "policyAdd",
                                                 {Value("r"), Value("a"),
                                                  Value("allow"), Value(100),
                                                  Value(1)},
                                                 0, 3),
                               1, 0)
              .ok);
  world.selfdestruct(jc, object);

  Digest before = world.digest();
  // threshold=1: the first frequent request reports at once... but a first
  // request at t>minInterval is never frequent, so make two rapid ones.
  Receipt first = call("accessControl", {Value("r"), Value("a"), Value(1000)}, 4);
  REQUIRE(first.ok);
  Receipt aborted = call("accessControl", {Value("r"), Value("a"), Value(1010)}, 5);
  CHECK_FALSE(aborted.ok);
  CHECK(aborted.code == ErrCode::ContractDestroyed);
  CHECK(aborted.events.empty());
  // The whole transaction rolled back: even ToLR kept its pre-abort value.
  const auto* acv = world.contractAs<AccessControlContract>(acc);
  CHECK(acv->policy("r", "a")->timeOfLastRequest == 1000);
  CHECK(world.digest() != before);  // first request did commit
}

TEST_CASE("deleteACC is creator-only and final") {
  AccRig rig;
  Receipt denied = rig.call(rig.subject, "deleteACC", {});
  CHECK(denied.code == ErrCode::PermissionDenied);
  CHECK(rig.world.contractAlive(rig.acc));

  REQUIRE(rig.call(rig.object, "deleteACC", {}).ok);
  CHECK_FALSE(rig.world.contractAlive(rig.acc));
  Receipt after = rig.request(rig.subject, "data", "read", 1000);
  CHECK(after.code == ErrCode::ContractDestroyed);
}

// Randomized trace equivalence against the straight-line reference model.
// The acceptance suite runs the full >=1000-schedule version; this keeps a
// fast regression-sized copy in the unit tests.
TEST_CASE("random schedules match the reference model step by step") {
  std::mt19937_64 rng(20260809);
  for (int schedule = 0; schedule < 200; ++schedule) {
    CAPTURE(schedule);
    int64_t base = 1 + static_cast<int64_t>(rng() % 3);
    int64_t interval = 1 + static_cast<int64_t>(rng() % 3);
    int64_t unit = 60;
    int64_t minInterval = 1 + static_cast<int64_t>(rng() % 200);
    int64_t threshold = 1 + static_cast<int64_t>(rng() % 5);
    bool allow = rng() % 4 != 0;

    AccRig rig(base, interval, unit);
    REQUIRE(rig.addPolicy("res", "act", allow ? "allow" : "deny", minInterval,
                          threshold)
                .ok);

    refmodel::RefJudge judge{base, interval, unit, 0};
    refmodel::RefPolicy refPolicy{allow, 0, minInterval, 0, threshold};
    refmodel::RefResource refResource;

    int64_t t = minInterval + 1 + static_cast<int64_t>(rng() % 1000);
    int steps = 8 + static_cast<int>(rng() % 20);
    for (int step = 0; step < steps; ++step) {
      CAPTURE(step);
      CAPTURE(t);
      Receipt got = rig.request(rig.subject, "res", "act", t);
      REQUIRE(got.ok);
      refmodel::RefOutcome want =
          refmodel::refAccessControl(refPolicy, refResource, judge, true, t);

      CHECK(got.returnValues.at(0).asBool() == want.result);
      CHECK(got.returnValues.at(1).asInt() == want.penalty);
      const Policy* p = rig.view().policy("res", "act");
      const ResourceState* rs = rig.view().resourceState("res");
      CHECK(p->timeOfLastRequest == want.timeOfLastRequest);
      CHECK(p->frequentRequests == want.frequentRequests);
      CHECK(rs->timeOfUnblock == want.timeOfUnblock);

      // Mixed gaps: mostly rapid-fire, sometimes a quiet stretch.
      if (rng() % 3 == 0) {
        t += minInterval + 1 + static_cast<int64_t>(rng() % 300);
      } else {
        t += 1 + static_cast<int64_t>(rng() % std::max<int64_t>(minInterval, 1));
      }
    }

    // Misbehavior ledgers agree too.
    const ResourceState* rs = rig.view().resourceState("res");
    REQUIRE(rs->misbehaviors.size() == refResource.misbehaviors.size());
    for (size_t i = 0; i < rs->misbehaviors.size(); ++i) {
      CHECK(rs->misbehaviors[i].time == refResource.misbehaviors[i].time);
      CHECK(rs->misbehaviors[i].penaltySeconds ==
            refResource.misbehaviors[i].penalty);
    }
  }
}

TEST_CASE("blocked windows never consult the judge") {
  AccRig rig;
  REQUIRE(rig.addPolicy("data", "read", "allow", 100, 2).ok);
  REQUIRE(rig.request(rig.subject, "data", "read", 1000).ok);
  REQUIRE(rig.request(rig.subject, "data", "read", 1050).ok);
  Receipt blocked = rig.request(rig.subject, "data", "read", 1080);
  REQUIRE(blocked.ok);
  CHECK(blocked.returnValues.at(1).asInt() == 60);

  const auto* judge = rig.world.contractAs<JudgeContract>(rig.jc);
  REQUIRE(judge->recordsFor(rig.subject) != nullptr);
  size_t reports = judge->recordsFor(rig.subject)->size();

  // Hammer inside the window: result=false, no new judge records.
  for (int64_t t : {1085, 1100, 1120, 1139}) {
    Receipt r = rig.request(rig.subject, "data", "read", t);
    REQUIRE(r.ok);
    CHECK_FALSE(r.returnValues.at(0).asBool());
    CHECK(r.returnValues.at(1).asInt() == 0);
  }
  CHECK(judge->recordsFor(rig.subject)->size() == reports);
}
