/* Compile-and-link smoke test: the public header must be valid C11 and the
 * library usable without any C++ runtime in the client. */
#include <math.h>
#include <stdio.h>

#include "ewl/ewl.h"

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    ++failures;
    fprintf(stderr, "FAIL: %s\n", what);
  }
}

int main(void) {
  const double half_pi = 1.57079632679489661923;

  expect(ewl_version() != NULL, "version string");
  expect(ewl_status_message(EWL_ERR_BUDGET) != NULL, "status message");

  ewl_strategy id, d, reply;
  expect(ewl_strategy_identity(&id) == EWL_OK, "identity");
  expect(ewl_strategy_defect(&d) == EWL_OK, "defect");

  ewl_game* game = NULL;
  expect(ewl_game_create(half_pi, 3, 0, 5, 1, &game) == EWL_OK, "create");

  double pr[4];
  ewl_payoffs pay;
  expect(ewl_game_eval(game, &id, &id, NULL, pr, &pay) == EWL_OK, "eval");
  expect(fabs(pay.alice - 3.0) < 1e-10, "mutual cooperation payoff");
  expect(fabs(pr[0] - 1.0) < 1e-10, "cooperation probability");

  expect(ewl_game_counterstrategy(game, &id, &id, &d, &reply) == EWL_OK,
         "counterstrategy");
  expect(ewl_game_eval(game, &d, &reply, NULL, NULL, &pay) == EWL_OK,
         "counterstrategy eval");
  expect(fabs(pay.bob - 3.0) < 1e-10, "restored cooperation");

  ewl_game_destroy(game);

  expect(ewl_game_create(2.0, 3, 0, 5, 1, &game) == EWL_ERR_RANGE, "range check");

  if (failures == 0) {
    printf("ok\n");
    return 0;
  }
  return 1;
}
