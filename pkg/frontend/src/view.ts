/** Pure HTML renderers for the workbench views.
 *
 * Every function maps service payloads to markup strings; no DOM access and
 * no arithmetic on index values, so the renderers are testable in plain node.
 */

import type {
  AlphaSnapshot,
  CertificateList,
  CertificateRecord,
  ProgramView,
  ReportView,
} from "./client.js";
import { elideNumeral } from "./format.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** A numeral cell: collapsed display with the full value stashed for
 * expand-on-click (main.ts toggles via the data attribute). */
export function renderNumeral(value: string): string {
  const n = elideNumeral(value);
  if (!n.elided) return `<span class="numeral">${escapeHtml(n.display)}</span>`;
  return (
    `<span class="numeral elided" role="button" tabindex="0" ` +
    `data-full="${escapeHtml(n.full)}" title="click to expand (${n.digits} digits)">` +
    `${escapeHtml(n.display)}</span>`
  );
}

export function renderAlphaTable(snapshot: AlphaSnapshot): string {
  const header = `<caption>store snapshot, version ${snapshot.version}</caption>`;
  if (snapshot.entries.length === 0) {
    return `<table id="alpha" data-version="${snapshot.version}">${header}` +
      `<tbody><tr><td class="empty" colspan="3">store is empty</td></tr></tbody></table>`;
  }
  const rows = snapshot.entries
    .map(
      (e) =>
        `<tr><td>${e.slot}</td><td>${renderNumeral(e.index)}</td>` +
        `<td class="prov-${e.provenance}">${e.provenance}</td></tr>`,
    )
    .join("");
  return (
    `<table id="alpha" data-version="${snapshot.version}">${header}` +
    `<thead><tr><th>slot</th><th>value</th><th>provenance</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}

export function renderProgram(p: ProgramView): string {
  return (
    `<section class="program"><h3>program ${renderNumeral(p.index)}</h3>` +
    `<pre>${escapeHtml(p.pretty)}</pre>` +
    `<details><summary>structural form</summary>` +
    `<pre>${escapeHtml(JSON.stringify(p.tree, null, 2))}</pre></details></section>`
  );
}

function findBySubject(records: CertificateRecord[], subject: string): CertificateRecord[] {
  return records.filter((r) => r.subject === subject);
}

function renderDerivation(
  rec: CertificateRecord,
  records: CertificateRecord[],
  depth: number,
): string {
  const label =
    `<span class="cert-claim">${rec.claim}</span> ` +
    `${renderNumeral(rec.subject)} <span class="cert-kind">by ${escapeHtml(rec.kind)}</span>`;
  if (rec.premises.length === 0 || depth > 8) return `<li>${label}</li>`;
  const children = rec.premises
    .map((p) => {
      const sub = findBySubject(records, p);
      if (sub.length === 0) return `<li class="premise">${renderNumeral(p)}</li>`;
      return sub.map((s) => renderDerivation(s, records, depth + 1)).join("");
    })
    .join("");
  return `<li>${label}<ul>${children}</ul></li>`;
}

export function renderCertificates(list: CertificateList): string {
  if (list.records.length === 0) {
    return `<div id="certs" data-version="${list.version}"><p class="empty">no certificates</p></div>`;
  }
  const items = list.records.map((r) => renderDerivation(r, list.records, 0)).join("");
  return `<div id="certs" data-version="${list.version}"><ul class="derivations">${items}</ul></div>`;
}

function renderCheckLines(lines: Array<{ n: number; status: string; detail?: string }>): string {
  return lines
    .map(
      (l) =>
        `<li class="check-${l.status}">n=${l.n} ${escapeHtml(l.status)}` +
        (l.detail ? ` ${escapeHtml(l.detail)}` : "") +
        `</li>`,
    )
    .join("");
}

export function renderReport(report: ReportView): string {
  const verdict = report.verdict ? "true" : "false";
  const head =
    `<h3>check ${escapeHtml(String(report.check))} on ${renderNumeral(String(report.enumerator))}` +
    `: verdict ${verdict}, ${report.inconclusive} inconclusive</h3>`;
  const sections: string[] = [];
  for (const key of ["lines", "diagonal", "escape"]) {
    const lines = report[key];
    if (Array.isArray(lines) && lines.length) {
      sections.push(`<h4>${key}</h4><ul>${renderCheckLines(lines)}</ul>`);
    }
  }
  return `<section class="report verdict-${verdict}">${head}${sections.join("")}</section>`;
}

/** Inline error banner for gate rejections, naming the unmet condition. */
export function renderRejection(index: string, reason: string): string {
  return (
    `<div class="rejection" role="alert">feed of ${renderNumeral(index)} rejected: ` +
    `${escapeHtml(reason)}</div>`
  );
}

export function renderStaleNotice(shown: number, current: number): string {
  return (
    `<div class="stale" role="status">view is at version ${shown} but the session ` +
    `is at ${current} — refresh to continue</div>`
  );
}
