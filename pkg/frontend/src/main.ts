/** Browser bootstrap: wires the controls, the four views, URL sync, the
 * error banner, and the stale-corpus indicator. */

import { breakdownBars, emotionsChart, sentimentChart, topicCards, wordBars }
  from "./charts.js";
import { ApiClient, resolveApiBase } from "./client.js";
import { decodeState, encodeState, validateState, type ViewState }
  from "./state.js";
import type { ApiErrorBody, Meta } from "./types.js";
import { ControversyView, EmotionsView, SentimentView, TopicsView }
  from "./views.js";

const META_POLL_MS = 30_000;

declare global {
  interface Window {
    TWEETSCOPE_API_BASE?: string;
  }
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function fillSelect(select: HTMLSelectElement, values: string[],
                    allLabel: string | null): void {
  select.innerHTML = "";
  if (allLabel !== null) {
    const opt = document.createElement("option");
    opt.value = "";
    opt.textContent = allLabel;
    select.appendChild(opt);
  }
  for (const value of values) {
    const opt = document.createElement("option");
    opt.value = value;
    opt.textContent = value;
    select.appendChild(opt);
  }
}

async function boot(): Promise<void> {
  const client = new ApiClient(
    resolveApiBase(location.search, window.TWEETSCOPE_API_BASE));
  const banner = el<HTMLDivElement>("banner");
  const staleBox = el<HTMLDivElement>("stale");

  const showError = (err: ApiErrorBody): void => {
    banner.textContent = `${err.code}: ${err.message}`;
    banner.hidden = false;
  };
  const clearError = (): void => {
    banner.hidden = true;
  };

  let meta: Meta;
  try {
    meta = (await client.fetchMeta()).meta;
  } catch (err) {
    showError({ status: 503, code: "not_ready",
                message: `API unreachable: ${String(err)}` });
    return;
  }

  let state: ViewState = decodeState(location.search);

  const sentimentView = new SentimentView(client, (body) => {
    clearError();
    el("sentiment-chart").innerHTML = sentimentChart(body.series);
    el("sentiment-note").textContent =
      `${body.series.length} ${body.granularity} buckets` +
      (body.country ? ` in ${body.country}` : " across all countries");
  }, showError);

  const emotionsView = new EmotionsView(client, (body) => {
    clearError();
    el("emotions-chart").innerHTML = emotionsChart(body.series);
  }, showError);

  const topicsView = new TopicsView(client, (body) => {
    clearError();
    el("topics-cards").innerHTML = topicCards(body);
    el("topics-note").textContent =
      `${body.topics.length} topics, top ${body.n_words} words, ${body.week}`;
  }, (week) => {
    el("topics-cards").innerHTML =
      `<p class="empty">no model for this week${week ? ` (${week})` : ""}</p>`;
  }, showError);

  const controversyView = new ControversyView(client, (terms, selected) => {
    const select = el<HTMLSelectElement>("term");
    if (select.options.length !== terms.terms.length) {
      fillSelect(select, terms.terms.map((t) => t.term), null);
    }
    select.value = selected;
    const summary = terms.terms.find((t) => t.term === selected);
    if (summary) {
      el("breakdown-chart").innerHTML = breakdownBars(
        summary.breakdown.countries, summary.breakdown.unknown);
      el("controversy-note").textContent =
        `${summary.total_hits} matching tweets`;
    }
  }, (body) => {
    clearError();
    el("cooccurrence-chart").innerHTML = wordBars(
      body.top.map((e) => ({ label: e.token, value: e.count })));
  }, showError);

  const updateSeriesViews = (): void => {
    void sentimentView.update(state, meta);
    void emotionsView.update(state, meta);
  };
  const updateTopics = (): void => void topicsView.update(state, meta);
  const updateControversy = (): void => void controversyView.update(state);

  const syncUrl = (): void => {
    const query = encodeState(state);
    history.replaceState(null, "", query ? `?${query}` : location.pathname);
  };

  const applyState = (patch: Partial<ViewState>,
                      affected: ("series" | "topics" | "controversy")[]): void => {
    state = { ...state, ...patch };
    const problems = validateState(state, meta);
    if (problems.length) {
      showError({ status: 400, code: "bad_parameter",
                  message: problems.join("; ") });
    }
    syncUrl();
    if (affected.includes("series")) updateSeriesViews();
    if (affected.includes("topics")) updateTopics();
    if (affected.includes("controversy")) updateControversy();
  };

  // --- control wiring ---
  const granularity = el<HTMLSelectElement>("granularity");
  const fromInput = el<HTMLInputElement>("from");
  const toInput = el<HTMLInputElement>("to");
  const country = el<HTMLSelectElement>("country");
  const week = el<HTMLSelectElement>("week");
  const nWords = el<HTMLInputElement>("n-words");
  const term = el<HTMLSelectElement>("term");
  const topN = el<HTMLInputElement>("top-n");

  fillSelect(country, meta.countries, "all countries");
  fillSelect(week, meta.topic_weeks, null);

  granularity.value = state.granularity;
  fromInput.value = state.from ?? "";
  toInput.value = state.to ?? "";
  country.value = state.country ?? "";
  week.value = state.week ??
    (meta.topic_weeks[meta.topic_weeks.length - 1] ?? "");
  nWords.value = String(state.nWords);
  topN.value = String(state.topN);

  granularity.addEventListener("change", () => applyState(
    { granularity: granularity.value as ViewState["granularity"],
      from: null, to: null }, ["series"]));
  fromInput.addEventListener("change", () => applyState(
    { from: fromInput.value || null }, ["series"]));
  toInput.addEventListener("change", () => applyState(
    { to: toInput.value || null }, ["series"]));
  country.addEventListener("change", () => applyState(
    { country: country.value || null }, ["series"]));
  week.addEventListener("change", () => applyState(
    { week: week.value || null }, ["topics"]));
  nWords.addEventListener("change", () => applyState(
    { nWords: Math.max(1, Number(nWords.value) || 10) }, ["topics"]));
  term.addEventListener("change", () => applyState(
    { term: term.value || null }, ["controversy"]));
  topN.addEventListener("change", () => applyState(
    { topN: Math.max(1, Number(topN.value) || 25) }, ["controversy"]));

  // --- staleness poll ---
  setInterval(() => {
    client.fetchMeta().then(({ meta: fresh, stale }) => {
      if (stale) {
        staleBox.hidden = false;
        staleBox.textContent =
          "data changed on the server — reload to see the current corpus";
      }
      meta = fresh;
    }).catch(() => { /* transient poll failures are not banners */ });
  }, META_POLL_MS);

  // initial render of all four views
  updateSeriesViews();
  updateTopics();
  updateControversy();
}

void boot();
