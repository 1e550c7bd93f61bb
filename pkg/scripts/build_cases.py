"""Regenerate src/varnamer/data/cases.jsonl from the snippets below.

The expression to extract is wrapped in «...»; the markers are removed and the
span is recorded as 1-based line/column with an inclusive end column.
"""

import json
from pathlib import Path

CASES = [
    ("dotidx-reuse", "dotIdx", """
// extraction site
default String packageName() {
    return name().substring(0, «name().lastIndexOf('.')»);
}
// sibling that already declares dotIdx
default String simpleName() {
    final int dotIdx = name().lastIndexOf('.');
    if (dotIdx < 0) {
        return name();
    } else {
        return name().substring(dotIdx + 1);
    }
}
"""),
    ("rule-buildId", "id", """
public void register(ServiceInstance serviceInstance) {
    registry.put(«buildId(serviceInstance)», serviceInstance);
    log.info("registered {}", serviceInstance);
}
"""),
    ("rule-features", "feature", """
private void collect(Iterator<Feature> features) {
    while (features.hasNext()) {
        process(«features.next()»);
    }
}
"""),
    ("rule-messages", "messages", """
public void report(CheckConfig checkConfig) {
    for (String key : «checkConfig.getMessages()».keySet()) {
        System.out.println(key);
    }
}
"""),
    ("generate-urls", "urls", """
List<String> resolve(String names) {
    return filter(«generateUrls(names)»);
}
"""),
    ("fetch-status", "executionStatus", """
void poll() {
    if («fetchExecutionStatus()» == Status.DONE) {
        finish();
    }
}
"""),
    ("aliases-next", "alias", """
void register(Iterator<String> aliases) {
    while (aliases.hasNext()) {
        table.add(«aliases.next()»);
    }
}
"""),
    ("datatype-message", "message", """
public void process(Exchange exchange) {
    splitBody(«exchange.getIn()»);
}
private void splitBody(Message message) {
    message.setBody(null);
}
"""),
    ("reuse-long-init", "currentUser", """
void audit() {
    record(«request.getSession().getAttribute("user")»);
}
void greet() {
    Object currentUser = request.getSession().getAttribute("user");
    send(currentUser);
}
"""),
    ("universal-null", "result", """
Object compute() {
    return «null»;
}
void other() {
    Object value = null;
    use(value);
}
"""),
    ("universal-zero", "index", """
int first() {
    return values[«0»];
}
void other() {
    int count = 0;
    count++;
}
"""),
    ("reuse-rejected-context", "name", """
void check() {
    if («getName()».isEmpty()) {
        return;
    }
}
void dump() {
    String tmp = getName();
    throw new IllegalStateException("bad " + tmp + " state");
}
"""),
    ("reuse-collides-param", "size", """
void show(int count) {
    print(«list.size()» + count);
}
void other() {
    int count = list.size();
    print(count + 1);
}
"""),
    ("get-user-name", "userName", """
void render(User user) {
    label.setText(«user.getUserName()»);
}
"""),
    ("get-address", "address", """
void ship(Person person) {
    courier.deliver(«person.getAddress()», parcel);
}
"""),
    ("is-enabled", "enabled", """
void toggle() {
    button.setSelected(«isEnabled()»);
}
"""),
    ("to-string", "text", """
void write(Object value) {
    out.append(«value.toString()»);
}
"""),
    ("new-list", "list", """
List<String> names() {
    return wrap(«new ArrayList<String>()»);
}
"""),
    ("find-user", "user", """
void login(long id) {
    session.bind(«repository.findUserById(id)»);
}
"""),
    ("create-connection", "connection", """
void open() {
    pool.add(«factory.createConnection()»);
}
"""),
    ("parse-int-keyword", "number", """
int convert(String value) {
    return «Integer.parseInt(value)» * 2;
}
"""),
    ("read-line", "line", """
void copy(BufferedReader reader) throws IOException {
    writer.write(«reader.readLine()»);
}
"""),
    ("get-timeout", "timeout", """
void configure(Config config) {
    client.setTimeout(«config.getTimeout()»);
}
"""),
    ("entries-next", "entry", """
void drain(Iterator<Entry> entries) {
    while (entries.hasNext()) {
        handle(«entries.next()»);
    }
}
"""),
    ("matches-next", "match", """
void scan(Iterator<Match> matches) {
    while (matches.hasNext()) {
        report(«matches.next()»);
    }
}
"""),
    ("items-get", "item", """
void show(List<Item> items, int i) {
    render(«items.get(i)»);
}
"""),
    ("trim-line", "trimmed", """
void copy(BufferedReader reader) throws IOException {
    writer.write(«reader.readLine().trim()»);
}
"""),
    ("current-time", "now", """
void stamp(Event event) {
    event.setTime(«System.currentTimeMillis()»);
}
"""),
    ("as-list", "list", """
void keep(String[] values) {
    store(«asList(values)»);
}
"""),
    ("reuse-class-name", "className", """
String describe() {
    return "instance of " + «this.getClass().getSimpleName()»;
}
String label() {
    String className = this.getClass().getSimpleName();
    return className.toLowerCase();
}
"""),
]


def to_record(case_id, truth, snippet):
    text = snippet.lstrip("\n")
    start = text.index("«")
    end = text.index("»") - 1
    source = text.replace("«", "").replace("»", "")

    def line_col(offset):
        line = source.count("\n", 0, offset) + 1
        col = offset - (source.rfind("\n", 0, offset) + 1) + 1
        return line, col

    sl, sc = line_col(start)
    el, ec = line_col(end - 1)
    span = {"startLine": sl, "startCol": sc, "endLine": el, "endCol": ec}
    return {"id": case_id, "source": source, "span": span, "ground_truth": truth}


def main():
    out = Path(__file__).resolve().parents[1] / "src" / "varnamer" / "data" / "cases.jsonl"
    with open(out, "w", encoding="utf-8") as fh:
        for case in CASES:
            fh.write(json.dumps(to_record(*case)) + "\n")
    print(f"wrote {len(CASES)} cases to {out}")


if __name__ == "__main__":
    main()
