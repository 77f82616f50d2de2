/** The complete drill-down state, encoded losslessly in the URL query so a
 * copied link reproduces the identical view. */

import type { Granularity, Meta } from "./types.js";

export interface ViewState {
  granularity: Granularity;
  from: string | null; // null = full observed range
  to: string | null;
  country: string | null; // null = all countries
  week: string | null; // topics view; null = latest available
  term: string | null; // controversy view; null = first listed term
  nWords: number;
  topN: number;
}

export const DEFAULT_STATE: ViewState = {
  granularity: "week",
  from: null,
  to: null,
  country: null,
  week: null,
  term: null,
  nWords: 10,
  topN: 25,
};

export function encodeState(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.granularity !== DEFAULT_STATE.granularity) {
    params.set("g", state.granularity);
  }
  if (state.from !== null) params.set("from", state.from);
  if (state.to !== null) params.set("to", state.to);
  if (state.country !== null) params.set("country", state.country);
  if (state.week !== null) params.set("week", state.week);
  if (state.term !== null) params.set("term", state.term);
  if (state.nWords !== DEFAULT_STATE.nWords) {
    params.set("n_words", String(state.nWords));
  }
  if (state.topN !== DEFAULT_STATE.topN) params.set("top_n", String(state.topN));
  return params.toString();
}

export function decodeState(query: string): ViewState {
  const params = new URLSearchParams(query);
  const state: ViewState = { ...DEFAULT_STATE };
  const g = params.get("g");
  if (g === "day" || g === "week") state.granularity = g;
  state.from = params.get("from");
  state.to = params.get("to");
  state.country = params.get("country");
  state.week = params.get("week");
  state.term = params.get("term");
  const nWords = Number(params.get("n_words"));
  if (Number.isInteger(nWords) && nWords >= 1) state.nWords = nWords;
  const topN = Number(params.get("top_n"));
  if (Number.isInteger(topN) && topN >= 1) state.topN = topN;
  return state;
}

/** from <= to, and the selected week must be one /meta advertises. */
export function validateState(state: ViewState, meta: Meta): string[] {
  const problems: string[] = [];
  if (state.from !== null && state.to !== null && state.from > state.to) {
    problems.push(`range is inverted: ${state.from} > ${state.to}`);
  }
  if (state.week !== null && !meta.topic_weeks.includes(state.week)) {
    problems.push(`no topic model for ${state.week}`);
  }
  return problems;
}

/** Concrete range for a request: explicit state, else the observed range. */
export function effectiveRange(
  state: ViewState,
  meta: Meta,
): { from: string | null; to: string | null } {
  const range = meta.date_range;
  const fallbackFrom =
    state.granularity === "week" ? range.from_week : range.from_day;
  const fallbackTo = state.granularity === "week" ? range.to_week : range.to_day;
  return { from: state.from ?? fallbackFrom, to: state.to ?? fallbackTo };
}
