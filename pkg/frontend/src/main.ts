/** Browser entry: wires the renderers to the service with version polling. */

import { EnumeratorBuilder, tryFeed } from "./builder.js";
import { ServiceError, WorkbenchClient } from "./client.js";
import {
  renderAlphaTable,
  renderCertificates,
  renderProgram,
  renderRejection,
  renderReport,
} from "./view.js";

const POLL_MS = 1500;

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function flash(target: HTMLElement, html: string): void {
  target.innerHTML = html;
}

export function start(baseUrl: string = ""): void {
  const client = new WorkbenchClient(baseUrl || window.location.origin);
  const builder = new EnumeratorBuilder(client);
  let shownVersion = -1;

  async function refresh(): Promise<void> {
    const snapshot = await client.alpha(shownVersion);
    if (snapshot.unchanged) return;
    shownVersion = snapshot.version;
    flash(el("alpha-pane"), renderAlphaTable(snapshot));
    flash(el("cert-pane"), renderCertificates(await client.certificates()));
  }

  // Expand-on-click for elided numerals anywhere in the page.
  document.addEventListener("click", (ev) => {
    const target = ev.target as HTMLElement;
    if (target.classList?.contains("elided") && target.dataset.full) {
      target.textContent = target.dataset.full;
      target.classList.remove("elided");
    }
  });

  el("inspect-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    const index = (el("inspect-index") as HTMLInputElement).value.trim();
    try {
      flash(el("program-pane"), renderProgram(await client.program(index)));
    } catch (err) {
      flash(el("program-pane"), renderRejection(index, String(err)));
    }
  });

  el("feed-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    const index = (el("feed-index") as HTMLInputElement).value.trim();
    const outcome = await tryFeed(client, index);
    if (!outcome.ok) {
      flash(el("feed-status"), renderRejection(index, outcome.rejection.reason));
    } else {
      flash(el("feed-status"), `<div class="ok">fed into slot ${outcome.slot}</div>`);
    }
    await refresh();
  });

  el("builder-const").addEventListener("click", async () => {
    const value = (el("builder-const-value") as HTMLInputElement).value.trim() || "0";
    try {
      const step = await builder.feedConst(value);
      flash(el("builder-status"), `<div class="ok">level 1 fed into slot ${step.slot}</div>`);
    } catch (err) {
      flash(el("builder-status"), renderRejection(value, String(err)));
    }
    await refresh();
  });

  // The Example-2 move: prepend the last diagonal output and feed.
  el("builder-next").addEventListener("click", async () => {
    try {
      const step = await builder.feedNextLevel();
      flash(el("builder-status"), `<div class="ok">next level fed into slot ${step.slot}</div>`);
    } catch (err) {
      const reason = err instanceof ServiceError ? err.reason : String(err);
      flash(el("builder-status"), renderRejection(builder.lastEnumerator ?? "?", reason));
    }
    await refresh();
  });

  el("query-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    const x = (el("query-x") as HTMLInputElement).value.trim();
    const out = await client.query(x);
    flash(el("query-status"), `<div class="ok">omega(${x}) received</div>`);
    flash(el("program-pane"), renderProgram(await client.program(out.returned)));
    await refresh();
  });

  el("verify-form").addEventListener("submit", async (ev) => {
    ev.preventDefault();
    const kind = (el("verify-kind") as HTMLSelectElement).value as
      | "diagonal"
      | "escape"
      | "thm5";
    const j = (el("verify-j") as HTMLInputElement).value.trim();
    try {
      flash(el("report-pane"), renderReport(await client.verify(kind, j)));
    } catch (err) {
      const reason = err instanceof ServiceError ? err.reason : String(err);
      flash(el("report-pane"), renderRejection(j, reason));
    }
    await refresh();
  });

  el("export-button").addEventListener("click", async () => {
    const log = await client.exportSession();
    const blob = new Blob([log], { type: "text/plain" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "session.log";
    a.click();
    URL.revokeObjectURL(a.href);
  });

  void refresh();
  setInterval(() => void refresh().catch(() => undefined), POLL_MS);
}

declare global {
  interface Window {
    recwbStart: typeof start;
  }
}

if (typeof window !== "undefined") {
  window.recwbStart = start;
}
